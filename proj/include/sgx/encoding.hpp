// Meta-encoding whose answer sets correspond one-to-one to the explanations of
// a stable model, and the executable cross-check of that correspondence.
//
// Reified predicates:
//   as(A)    atom A is in the model being explained
//   sup(L)   the body of rule L holds in the model
//   f(L,A)   rule L was fired for atom A (the label of A is L)
//   f(A)     A was derived by some fired rule
#pragma once

#include <sgx/core.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgx {

//! Reified signatures outgrow kDefaultSignatureCap quickly; the encoding gets its own bound.
inline constexpr std::size_t kDefaultEncodingCap = 64;

//! Non-ground encoding in mainstream ASP syntax (`:-`, `not`, `{ }`, `!=`).
std::string emit_xP(const Program& program);

//! `as(a).` facts for the model, one per line, in name order.
std::string emit_model_facts(const Interpretation& interp);

struct ReifiedAtom {
    enum class Kind { Fired, Derived };
    Kind                 kind;
    std::optional<Label> label; // set for Fired
    Atom                 atom;
};

//! The encoding instantiated for one model, with sup/as atoms evaluated away.
//! Internally reified atoms are flattened to tokens: f__<label>__<atom> and f__<atom>.
struct GroundEncoding {
    Program                               program;
    Interpretation                        model;
    std::map<Atom, ReifiedAtom>           origins;
    std::map<std::pair<Label, Atom>, Atom> fired;   // (label, atom) -> f(label, atom)
    std::map<Atom, Atom>                  derived; // atom -> f(atom)

    //! (atom, label) pairs with f(label, atom) in `answer_set`, in name order.
    [[nodiscard]] std::vector<std::pair<Atom, Label>> fired_pairs(const Interpretation& answer_set) const;
    //! Atoms a with f(a) in `answer_set`.
    [[nodiscard]] Interpretation derived_atoms(const Interpretation& answer_set) const;
};

//! Builds the ground encoding. Without `force`, throws NotStable unless `interp` is a
//! stable model; with `force`, any classical model is accepted (else NotAModel).
GroundEncoding ground_encoding(const Program& program, const Interpretation& interp, bool force = false);

//! Answer sets of the ground encoding, in canonical order. Throws SignatureTooLarge
//! when the reified signature exceeds `cap`.
std::vector<Interpretation> answer_sets_of_encoding(const Program& program, const Interpretation& interp,
                                                    bool force = false, std::size_t cap = kDefaultEncodingCap);

struct BijectionReport {
    Interpretation           model;
    std::size_t              explanations = 0;
    std::size_t              answer_sets  = 0;
    std::size_t              matched      = 0;
    std::vector<std::string> problems; // unmatched elements and soundness failures

    [[nodiscard]] bool ok() const {
        return problems.empty() && explanations == answer_sets && matched == explanations;
    }
};

//! Matches the explanations of `interp` against the answer sets of its encoding.
//! Throws NotStable.
BijectionReport crosscheck_bijection(const Program& program, const Interpretation& interp,
                                     std::size_t cap = kDefaultEncodingCap);

} // namespace sgx
