#include "indexed.hpp"

#include <algorithm>

namespace sgx::detail {

namespace {
std::vector<AtomId> ids(const Program& program, const AtomList& atoms) {
    std::vector<AtomId> out;
    out.reserve(atoms.size());
    for (const Atom& a : atoms) {
        out.push_back(static_cast<AtomId>(*program.atom_index(a)));
    }
    return out;
}

bool all_true(const std::vector<AtomId>& atoms, const Assignment& v) {
    return std::all_of(atoms.begin(), atoms.end(), [&](AtomId a) { return v[a]; });
}
bool none_true(const std::vector<AtomId>& atoms, const Assignment& v) {
    return std::none_of(atoms.begin(), atoms.end(), [&](AtomId a) { return v[a]; });
}
} // namespace

IndexedProgram IndexedProgram::from(const Program& program) {
    IndexedProgram p;
    p.atoms = program.signature().size();
    for (const Rule& r : program.rules()) {
        p.rules.push_back({ids(program, r.head()), ids(program, r.pos_body()), ids(program, r.neg_body()),
                           ids(program, r.dneg_body())});
    }
    p.index_heads();
    return p;
}

void IndexedProgram::add(IndexedRule rule) { rules.push_back(std::move(rule)); }

void IndexedProgram::index_heads() {
    in_head.assign(atoms, {});
    for (size_t i = 0; i < rules.size(); ++i) {
        for (AtomId a : rules[i].head) {
            in_head[a].push_back(i);
        }
    }
}

Assignment to_assignment(const Program& program, const Interpretation& interp) {
    Assignment v(program.signature().size(), false);
    for (const Atom& a : interp) {
        if (auto i = program.atom_index(a)) {
            v[*i] = true;
        }
    }
    return v;
}

Interpretation to_interpretation(const Program& program, const Assignment& values) {
    Interpretation res;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i]) {
            res.insert(program.signature()[i]);
        }
    }
    return res;
}

bool body_true(const IndexedRule& r, const Assignment& v) {
    return all_true(r.pos, v) && none_true(r.neg, v) && all_true(r.dneg, v);
}

bool rule_true(const IndexedRule& r, const Assignment& v) { return !body_true(r, v) || !none_true(r.head, v); }

bool model_of(const IndexedProgram& p, const Assignment& v) {
    return std::all_of(p.rules.begin(), p.rules.end(), [&](const IndexedRule& r) { return rule_true(r, v); });
}

IndexedProgram reduct_of(const IndexedProgram& p, const Assignment& v) {
    IndexedProgram out;
    out.atoms = p.atoms;
    for (const IndexedRule& r : p.rules) {
        if (none_true(r.neg, v) && all_true(r.dneg, v)) {
            out.add({r.head, r.pos, {}, {}});
        }
    }
    out.index_heads();
    return out;
}

bool stable(const IndexedProgram& p, const Assignment& v) {
    if (!model_of(p, v)) {
        return false;
    }
    IndexedProgram red = reduct_of(p, v);
    bool           disjunctive =
        std::any_of(red.rules.begin(), red.rules.end(), [](const IndexedRule& r) { return r.head.size() > 1; });
    if (!disjunctive) {
        // The least model of the definite part is below every model of the reduct,
        // and positive constraints hold in every subset of v.
        Assignment least(p.atoms, false);
        for (bool changed = true; changed;) {
            changed = false;
            for (const IndexedRule& r : red.rules) {
                if (r.head.size() == 1 && !least[r.head[0]] && all_true(r.pos, least)) {
                    least[r.head[0]] = true;
                    changed          = true;
                }
            }
        }
        return least == v;
    }
    // Look for a model of the reduct strictly below v.
    IndexedRule below;
    for (AtomId a = 0; a < p.atoms; ++a) {
        if (v[a]) {
            below.pos.push_back(a);
        }
    }
    red.add(std::move(below));
    red.index_heads();
    ModelSearch search(red, false);
    for (AtomId a = 0; a < p.atoms; ++a) {
        if (!v[a]) {
            search.fix_false(a);
        }
    }
    bool smaller = false;
    search.run([&](const Assignment&) {
        smaller = true;
        return false;
    });
    return !smaller;
}

ModelSearch::ModelSearch(const IndexedProgram& program, bool require_support)
    : prog_(program), support_(require_support), root_(program.atoms, Unknown) {}

void ModelSearch::fix_false(AtomId atom) { root_[atom] = False; }

void ModelSearch::run(const std::function<bool(const Assignment&)>& visit) { search(root_, visit); }

bool ModelSearch::search(State s, const std::function<bool(const Assignment&)>& visit) const {
    if (!propagate(s)) {
        return true;
    }
    auto open = std::find(s.begin(), s.end(), Unknown);
    if (open == s.end()) {
        Assignment v(s.size());
        std::transform(s.begin(), s.end(), v.begin(), [](Value x) { return x == True; });
        return visit(v);
    }
    for (Value choice : {False, True}) {
        State next = s;
        next[static_cast<size_t>(open - s.begin())] = choice;
        if (!search(std::move(next), visit)) {
            return false;
        }
    }
    return true;
}

bool ModelSearch::propagate(State& s) const {
    // Literal view: value an atom must take for the body literal to hold.
    struct Lit {
        AtomId atom;
        Value  want;
    };
    std::vector<Lit> lits;
    auto             body_lits = [&](const IndexedRule& r) {
        lits.clear();
        for (AtomId a : r.pos) lits.push_back({a, True});
        for (AtomId a : r.neg) lits.push_back({a, False});
        for (AtomId a : r.dneg) lits.push_back({a, True});
    };
    // Returns False if some literal fails, True if all hold, Unknown otherwise;
    // `open` receives the last undecided literal.
    auto body_value = [&](const Lit*& open, size_t& n_open) {
        n_open = 0;
        for (const Lit& l : lits) {
            Value x = s[l.atom];
            if (x == Unknown) {
                ++n_open;
                open = &l;
            }
            else if (x != l.want) {
                return False;
            }
        }
        return n_open == 0 ? True : Unknown;
    };
    auto set = [&](AtomId a, Value x, bool& changed) {
        if (s[a] == Unknown) {
            s[a]    = x;
            changed = true;
            return true;
        }
        return s[a] == x;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (const IndexedRule& r : prog_.rules) {
            size_t head_open = 0;
            AtomId last_open = 0;
            bool   head_true = false;
            for (AtomId h : r.head) {
                if (s[h] == True) {
                    head_true = true;
                }
                else if (s[h] == Unknown) {
                    ++head_open;
                    last_open = h;
                }
            }
            if (head_true) {
                continue;
            }
            body_lits(r);
            const Lit* open   = nullptr;
            size_t     n_open = 0;
            Value      body   = body_value(open, n_open);
            if (body == False) {
                continue;
            }
            if (body == True) {
                if (head_open == 0) {
                    return false;
                }
                if (head_open == 1 && !set(last_open, True, changed)) {
                    return false;
                }
            }
            else if (head_open == 0 && n_open == 1) {
                if (!set(open->atom, open->want == True ? False : True, changed)) {
                    return false;
                }
            }
        }
        if (!support_) {
            continue;
        }
        for (AtomId a = 0; a < prog_.atoms; ++a) {
            if (s[a] == False) {
                continue;
            }
            size_t             live = 0;
            const IndexedRule* only = nullptr;
            for (size_t ri : prog_.in_head[a]) {
                body_lits(prog_.rules[ri]);
                const Lit* open   = nullptr;
                size_t     n_open = 0;
                if (body_value(open, n_open) != False) {
                    ++live;
                    only = &prog_.rules[ri];
                }
            }
            if (live == 0) {
                if (!set(a, False, changed)) {
                    return false;
                }
            }
            else if (live == 1 && s[a] == True) {
                body_lits(*only);
                for (const Lit& l : lits) {
                    if (!set(l.atom, l.want, changed)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace sgx::detail
