#include <sgx/encoding.hpp>

#include <sgx/explain.hpp>
#include <sgx/semantics.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace sgx {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) {
            out += ", ";
        }
        out += p;
    }
    return out;
}

std::string as(const Atom& a) { return "as(" + a.name() + ")"; }

class GroundBuilder {
public:
    explicit GroundBuilder(GroundEncoding& enc) : enc_(enc) {}

    Atom fired(const Label& l, const Atom& a) {
        auto key = std::make_pair(l, a);
        if (auto it = enc_.fired.find(key); it != enc_.fired.end()) {
            return it->second;
        }
        Atom res = fresh("f__" + l.id() + "__" + a.name());
        enc_.fired.emplace(key, res);
        enc_.origins.emplace(res, ReifiedAtom{ReifiedAtom::Kind::Fired, l, a});
        return res;
    }

    Atom derived(const Atom& a) {
        if (auto it = enc_.derived.find(a); it != enc_.derived.end()) {
            return it->second;
        }
        Atom res = fresh("f__" + a.name());
        enc_.derived.emplace(a, res);
        enc_.origins.emplace(res, ReifiedAtom{ReifiedAtom::Kind::Derived, std::nullopt, a});
        return res;
    }

    void rule(AtomList head, AtomList pos, AtomList neg = {}, AtomList dneg = {}) {
        rules_.emplace_back(Label("x_" + std::to_string(rules_.size() + 1)), std::move(head), std::move(pos),
                            std::move(neg), std::move(dneg));
    }

    std::vector<Rule> take() { return std::move(rules_); }

private:
    // Names are flattened with "__"; a clash (labels or atoms containing "__") gets a suffix.
    Atom fresh(std::string name) {
        std::string candidate = name;
        for (int k = 1; taken_.contains(candidate); ++k) {
            candidate = name + "_" + std::to_string(k);
        }
        taken_.insert(candidate);
        return Atom(candidate);
    }

    GroundEncoding&       enc_;
    std::set<std::string> taken_;
    std::vector<Rule>     rules_;
};

} // namespace

std::string emit_xP(const Program& program) {
    std::ostringstream out;
    for (const Rule& r : program.rules()) {
        const std::string& l = r.label().id();
        for (const Atom& p : r.head()) {
            std::vector<std::string> sup;
            for (const Atom& q : r.pos_body()) sup.push_back(as(q));
            sup.push_back(as(p));
            for (const Atom& s : r.neg_body()) sup.push_back("not " + as(s));
            for (const Atom& t : r.dneg_body()) sup.push_back("not not " + as(t));
            out << "sup(" << l << ") :- " << join(sup) << ".\n";
        }
        for (const Atom& p : r.head()) {
            std::vector<std::string> body;
            for (const Atom& q : r.pos_body()) body.push_back("f(" + q.name() + ")");
            body.push_back(as(p));
            body.push_back("sup(" + l + ")");
            out << "{ f(" << l << "," << p.name() << ") } :- " << join(body) << ".\n";
        }
        for (size_t i = 0; i < r.head().size(); ++i) {
            for (size_t h = i + 1; h < r.head().size(); ++h) {
                out << ":- f(" << l << "," << r.head()[i].name() << "), f(" << l << "," << r.head()[h].name()
                    << ").\n";
            }
        }
    }
    out << "f(A) :- f(L,A), as(A).\n";
    out << ":- not f(A), as(A).\n";
    out << ":- f(L,A), f(L2,A), L != L2, as(A).\n";
    return out.str();
}

std::string emit_model_facts(const Interpretation& interp) {
    std::string out;
    for (const Atom& a : interp) {
        out += as(a) + ".\n";
    }
    return out;
}

std::vector<std::pair<Atom, Label>> GroundEncoding::fired_pairs(const Interpretation& answer_set) const {
    std::vector<std::pair<Atom, Label>> out;
    for (const Atom& x : answer_set) {
        auto it = origins.find(x);
        if (it != origins.end() && it->second.kind == ReifiedAtom::Kind::Fired) {
            out.emplace_back(it->second.atom, *it->second.label);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Interpretation GroundEncoding::derived_atoms(const Interpretation& answer_set) const {
    Interpretation out;
    for (const Atom& x : answer_set) {
        auto it = origins.find(x);
        if (it != origins.end() && it->second.kind == ReifiedAtom::Kind::Derived) {
            out.insert(it->second.atom);
        }
    }
    return out;
}

GroundEncoding ground_encoding(const Program& program, const Interpretation& interp, bool force) {
    if (force) {
        if (!is_model(interp, program)) {
            throw NotAModel();
        }
    }
    else if (!is_stable(program, interp)) {
        throw NotStable();
    }
    GroundEncoding enc;
    enc.model = interp;
    GroundBuilder b(enc);

    // Eligible (rule, head atom) pairs: body true in the model, head atom in the model.
    std::vector<std::pair<const Rule*, std::vector<Atom>>> eligible;
    for (const Rule& r : program.rules()) {
        if (!satisfies_body(interp, r)) {
            continue;
        }
        std::vector<Atom> heads;
        std::copy_if(r.head().begin(), r.head().end(), std::back_inserter(heads),
                     [&](const Atom& a) { return interp.contains(a); });
        if (!heads.empty()) {
            eligible.emplace_back(&r, std::move(heads));
        }
    }

    // {f(l,p)} :- f(q1), ..., f(qn).
    for (const auto& [r, heads] : eligible) {
        for (const Atom& p : heads) {
            AtomList body;
            for (const Atom& q : r->pos_body()) {
                body.push_back(b.derived(q));
            }
            Atom fp = b.fired(r->label(), p);
            b.rule({fp}, std::move(body), {}, {fp});
        }
    }
    // :- f(l,pi), f(l,pj).
    for (const auto& [r, heads] : eligible) {
        for (size_t i = 0; i < heads.size(); ++i) {
            for (size_t j = i + 1; j < heads.size(); ++j) {
                b.rule({}, {b.fired(r->label(), heads[i]), b.fired(r->label(), heads[j])});
            }
        }
    }
    // f(a) :- f(l,a).
    std::map<Atom, std::vector<Label>> labels_of;
    for (const auto& [r, heads] : eligible) {
        for (const Atom& p : heads) {
            labels_of[p].push_back(r->label());
        }
    }
    for (const Atom& a : interp) {
        for (const Label& l : labels_of[a]) {
            b.rule({b.derived(a)}, {b.fired(l, a)});
        }
    }
    // :- not f(a).
    for (const Atom& a : interp) {
        b.rule({}, {}, {b.derived(a)});
    }
    // :- f(l,a), f(l',a).
    for (const Atom& a : interp) {
        const auto& ls = labels_of[a];
        for (size_t i = 0; i < ls.size(); ++i) {
            for (size_t j = i + 1; j < ls.size(); ++j) {
                b.rule({}, {b.fired(ls[i], a), b.fired(ls[j], a)});
            }
        }
    }
    enc.program = validate_program(b.take());
    return enc;
}

std::vector<Interpretation> answer_sets_of_encoding(const Program& program, const Interpretation& interp, bool force,
                                                    std::size_t cap) {
    return enumerate_stable(ground_encoding(program, interp, force).program, cap);
}

BijectionReport crosscheck_bijection(const Program& program, const Interpretation& interp, std::size_t cap) {
    GroundEncoding  enc = ground_encoding(program, interp);
    BijectionReport report;
    report.model = interp;

    auto explanations   = enumerate_explanations(program, interp);
    auto answer_sets    = enumerate_stable(enc.program, cap);
    report.explanations = explanations.size();
    report.answer_sets  = answer_sets.size();

    std::map<Labelling, bool> seen; // labelling -> matched by some answer set
    for (const Explanation& e : explanations) {
        seen.emplace(e.labelling(), false);
    }
    for (const Interpretation& j : answer_sets) {
        const std::string tag = "answer set {" + j.to_string() + "}";
        if (enc.derived_atoms(j) != interp) {
            report.problems.push_back(tag + " derives atoms other than the model");
        }
        Labelling labelling;
        bool      functional = true;
        for (auto& [atom, label] : enc.fired_pairs(j)) {
            functional = labelling.emplace(atom, label).second && functional;
        }
        if (!functional) {
            report.problems.push_back(tag + " assigns two labels to one atom");
            continue;
        }
        GraphRecord record{interp, labelling, {}};
        try {
            record.edges = induced_edges(program, labelling);
        }
        catch (const UnknownLabel&) {
        }
        if (!validate_explanation(program, interp, record)) {
            report.problems.push_back(tag + " does not induce an explanation");
            continue;
        }
        auto it = seen.find(labelling);
        if (it == seen.end()) {
            report.problems.push_back(tag + " matches no enumerated explanation");
        }
        else if (it->second) {
            report.problems.push_back(tag + " duplicates an explanation already matched");
        }
        else {
            it->second = true;
            ++report.matched;
        }
    }
    for (const auto& [labelling, matched] : seen) {
        if (!matched) {
            std::string desc;
            for (const auto& [a, l] : labelling) {
                desc += (desc.empty() ? "" : ", ") + l.id() + ": " + a.name();
            }
            report.problems.push_back("explanation {" + desc + "} has no answer set");
        }
    }
    return report;
}

} // namespace sgx
