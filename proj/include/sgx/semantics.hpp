// Classical satisfaction, reduct, support, the immediate consequence operator,
// and enumeration of classical and stable models.
#pragma once

#include <sgx/core.hpp>

#include <cstddef>
#include <vector>

namespace sgx {

//! Default bound on the number of atoms enumeration will accept.
inline constexpr std::size_t kDefaultSignatureCap = 22;

//! Classical truth of the body: pos_body and dneg_body true, neg_body false.
bool satisfies_body(const Interpretation& interp, const Rule& rule);
//! Classical truth of the rule read as body -> head.
bool satisfies(const Interpretation& interp, const Rule& rule);
bool is_model(const Interpretation& interp, const Program& program);

//! All classical models in canonical order. Throws SignatureTooLarge.
std::vector<Interpretation> enumerate_models(const Program& program, std::size_t cap = kDefaultSignatureCap);

//! Keeps each rule whose negative body part holds in `interp`, stripped to head <- pos_body.
Program reduct(const Program& program, const Interpretation& interp);

//! Rules with `atom` in the head and a body true in `interp`, in program order.
std::vector<const Rule*> support(const Interpretation& interp, const Program& program, const Atom& atom);

//! T_P(I) for non-disjunctive programs. Throws NotNonDisjunctive.
Interpretation tp_step(const Program& program, const Interpretation& interp);

//! Fixpoint of tp_step from the empty set. Throws NotHorn unless `program` is Horn.
//! Constraints are ignored; check is_model on the result for consistency.
Interpretation least_model(const Program& program);

//! True if `interp` is a minimal model of reduct(program, interp).
bool is_stable(const Program& program, const Interpretation& interp);

//! All stable models in canonical order. Throws SignatureTooLarge.
std::vector<Interpretation> enumerate_stable(const Program& program, std::size_t cap = kDefaultSignatureCap);

} // namespace sgx
