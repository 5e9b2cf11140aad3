// Index-based program view and a backtracking model search used by the
// semantics module. Internal header.
#pragma once

#include <sgx/core.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace sgx::detail {

using AtomId = std::uint32_t;

struct IndexedRule {
    std::vector<AtomId> head;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    std::vector<AtomId> dneg;
};

//! Rules over atom ids 0..atoms-1; ids follow the program signature.
struct IndexedProgram {
    std::size_t                      atoms = 0;
    std::vector<IndexedRule>         rules;
    std::vector<std::vector<size_t>> in_head; // atom -> rules having it in the head

    static IndexedProgram from(const Program& program);
    void                  add(IndexedRule rule);
    void                  index_heads();
};

using Assignment = std::vector<bool>;

Assignment     to_assignment(const Program& program, const Interpretation& interp);
Interpretation to_interpretation(const Program& program, const Assignment& values);

bool body_true(const IndexedRule& r, const Assignment& v);
bool rule_true(const IndexedRule& r, const Assignment& v);
bool model_of(const IndexedProgram& p, const Assignment& v);

//! Keeps rules whose negative part holds under `v`, stripped to their positive part.
IndexedProgram reduct_of(const IndexedProgram& p, const Assignment& v);

//! True if `v` is a minimal model of reduct_of(p, v).
bool stable(const IndexedProgram& p, const Assignment& v);

//! DPLL-style enumeration of total assignments satisfying every rule classically,
//! with unit propagation on the rule clauses. With `require_support`, every true
//! atom must also head some rule whose body is true.
class ModelSearch {
public:
    ModelSearch(const IndexedProgram& program, bool require_support);

    void fix_false(AtomId atom);

    //! Calls `visit` for every model found; stops early when `visit` returns false.
    void run(const std::function<bool(const Assignment&)>& visit);

private:
    enum Value : std::int8_t { Unknown = -1, False = 0, True = 1 };
    using State = std::vector<Value>;

    bool propagate(State& s) const;
    bool search(State s, const std::function<bool(const Assignment&)>& visit) const;

    const IndexedProgram& prog_;
    bool                  support_;
    State                 root_;
};

} // namespace sgx::detail
