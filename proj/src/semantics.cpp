#include <sgx/semantics.hpp>

#include "indexed.hpp"

#include <algorithm>

namespace sgx {

namespace {
bool all_in(const AtomList& atoms, const Interpretation& interp) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return interp.contains(a); });
}
bool none_in(const AtomList& atoms, const Interpretation& interp) {
    return std::none_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return interp.contains(a); });
}
bool negative_part_holds(const Rule& r, const Interpretation& interp) {
    return none_in(r.neg_body(), interp) && all_in(r.dneg_body(), interp);
}
void check_cap(const Program& program, std::size_t cap) {
    if (program.signature().size() > cap) {
        throw SignatureTooLarge(program.signature().size(), cap);
    }
}
bool inside_signature(const Program& program, const Interpretation& interp) {
    return std::all_of(interp.begin(), interp.end(), [&](const Atom& a) { return program.in_signature(a); });
}
} // namespace

bool satisfies_body(const Interpretation& interp, const Rule& rule) {
    return all_in(rule.pos_body(), interp) && negative_part_holds(rule, interp);
}

bool satisfies(const Interpretation& interp, const Rule& rule) {
    return !satisfies_body(interp, rule) || !none_in(rule.head(), interp);
}

bool is_model(const Interpretation& interp, const Program& program) {
    return std::all_of(program.rules().begin(), program.rules().end(),
                       [&](const Rule& r) { return satisfies(interp, r); });
}

std::vector<Interpretation> enumerate_models(const Program& program, std::size_t cap) {
    check_cap(program, cap);
    auto                        indexed = detail::IndexedProgram::from(program);
    std::vector<Interpretation> out;
    detail::ModelSearch(indexed, false).run([&](const detail::Assignment& v) {
        out.push_back(detail::to_interpretation(program, v));
        return true;
    });
    sort_canonical(out);
    return out;
}

Program reduct(const Program& program, const Interpretation& interp) {
    std::vector<Rule> kept;
    for (const Rule& r : program.rules()) {
        if (negative_part_holds(r, interp)) {
            kept.emplace_back(r.label(), r.head(), r.pos_body());
        }
    }
    return validate_program(std::move(kept));
}

std::vector<const Rule*> support(const Interpretation& interp, const Program& program, const Atom& atom) {
    std::vector<const Rule*> out;
    for (const Rule& r : program.rules()) {
        if (r.has_in_head(atom) && satisfies_body(interp, r)) {
            out.push_back(&r);
        }
    }
    return out;
}

Interpretation tp_step(const Program& program, const Interpretation& interp) {
    if (!program.is_non_disjunctive()) {
        throw NotNonDisjunctive();
    }
    Interpretation out;
    for (const Rule& r : program.rules()) {
        if (r.head().size() == 1 && satisfies_body(interp, r)) {
            out.insert(r.head().front());
        }
    }
    return out;
}

Interpretation least_model(const Program& program) {
    if (!program.is_horn()) {
        throw NotHorn();
    }
    Interpretation cur;
    for (;;) {
        Interpretation next = tp_step(program, cur);
        if (next == cur) {
            return cur;
        }
        cur = std::move(next);
    }
}

bool is_stable(const Program& program, const Interpretation& interp) {
    if (!inside_signature(program, interp)) {
        return false; // atoms without rules never belong to a minimal model
    }
    return detail::stable(detail::IndexedProgram::from(program), detail::to_assignment(program, interp));
}

std::vector<Interpretation> enumerate_stable(const Program& program, std::size_t cap) {
    check_cap(program, cap);
    auto                        indexed = detail::IndexedProgram::from(program);
    std::vector<Interpretation> out;
    // Stable models are supported, so the support-pruned search loses none of them.
    detail::ModelSearch(indexed, true).run([&](const detail::Assignment& v) {
        if (detail::stable(indexed, v)) {
            out.push_back(detail::to_interpretation(program, v));
        }
        return true;
    });
    sort_canonical(out);
    return out;
}

} // namespace sgx
