#include <sgx/explain.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace sgx {

bool validate_explanation(const Program& program, const Interpretation& interp, const GraphRecord& candidate,
                          GraphKind kind) {
    if (!is_model(interp, program)) {
        throw NotAModel();
    }
    if (candidate.model != interp) {
        throw ModelMismatch();
    }
    if (candidate.labelling.size() != interp.size()) {
        return false;
    }
    std::set<Label>                 used;
    std::map<Atom, std::set<Atom>>  incoming;
    for (const auto& [from, to] : candidate.edges) {
        if (!interp.contains(from) || !interp.contains(to)) {
            return false;
        }
        incoming[to].insert(from);
    }
    for (const auto& [atom, label] : candidate.labelling) {
        if (!interp.contains(atom) || !used.insert(label).second) {
            return false;
        }
        const Rule* r = program.find(label);
        if (r == nullptr || !r->has_in_head(atom) || !satisfies_body(interp, *r)) {
            return false;
        }
        std::set<Atom> body(r->pos_body().begin(), r->pos_body().end());
        if (body != incoming[atom]) {
            return false;
        }
    }
    return kind == GraphKind::SupportGraph || is_acyclic(candidate.model, candidate.edges);
}

namespace {

// Depth-first search over per-atom label choices. Atoms are visited in name order
// and candidate rules in label order, so solutions come out lexicographically.
class GraphSearch {
public:
    GraphSearch(const Program& program, const Interpretation& interp, GraphKind kind)
        : program_(program), kind_(kind), atoms_(interp.begin(), interp.end()) {
        if (!is_model(interp, program)) {
            throw NotAModel();
        }
        for (size_t i = 0; i < atoms_.size(); ++i) {
            index_.emplace(atoms_[i], i);
        }
        for (const Atom& a : atoms_) {
            auto sup = support(interp, program, a);
            std::sort(sup.begin(), sup.end(), [](const Rule* x, const Rule* y) { return x->label() < y->label(); });
            candidates_.push_back(std::move(sup));
        }
        chosen_.assign(atoms_.size(), nullptr);
        out_.assign(atoms_.size(), {});
    }

    template <typename Visit>
    void run(Visit&& visit) {
        if (std::any_of(candidates_.begin(), candidates_.end(), [](const auto& c) { return c.empty(); })) {
            return;
        }
        descend(0, visit);
    }

    Labelling labelling() const {
        Labelling l;
        for (size_t i = 0; i < atoms_.size(); ++i) {
            l.emplace(atoms_[i], chosen_[i]->label());
        }
        return l;
    }

private:
    template <typename Visit>
    bool descend(size_t i, Visit& visit) {
        if (i == atoms_.size()) {
            return visit(*this);
        }
        for (const Rule* r : candidates_[i]) {
            if (used_.contains(r->label().id())) {
                continue;
            }
            std::vector<size_t> sources;
            for (const Atom& q : r->pos_body()) {
                sources.push_back(index_.at(q)); // body holds, so q is in the model
            }
            if (kind_ == GraphKind::Explanation && closes_cycle(i, sources)) {
                continue;
            }
            chosen_[i] = r;
            used_.insert(r->label().id());
            for (size_t s : sources) {
                out_[s].push_back(i);
            }
            bool go_on = descend(i + 1, visit);
            for (size_t s : sources) {
                out_[s].pop_back();
            }
            used_.erase(r->label().id());
            chosen_[i] = nullptr;
            if (!go_on) {
                return false;
            }
        }
        return true;
    }

    // Adding edges s -> target closes a cycle iff target already reaches some s.
    bool closes_cycle(size_t target, const std::vector<size_t>& sources) const {
        if (sources.empty()) {
            return false;
        }
        std::vector<bool>   seen(atoms_.size(), false);
        std::vector<size_t> stack{target};
        seen[target] = true;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            if (std::find(sources.begin(), sources.end(), x) != sources.end()) {
                return true;
            }
            for (size_t y : out_[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    const Program&                        program_;
    GraphKind                             kind_;
    std::vector<Atom>                     atoms_;
    std::map<Atom, size_t>                index_;
    std::vector<std::vector<const Rule*>> candidates_;
    std::vector<const Rule*>              chosen_;
    std::set<std::string>                 used_;
    std::vector<std::vector<size_t>>      out_;
};

std::vector<Explanation> enumerate(const Program& program, const Interpretation& interp, GraphKind kind,
                                   std::optional<std::size_t> limit) {
    std::vector<Explanation> out;
    if (limit && *limit == 0) {
        return out;
    }
    GraphSearch search(program, interp, kind);
    search.run([&](const GraphSearch& s) {
        out.emplace_back(program, s.labelling(), kind);
        return !limit || out.size() < *limit;
    });
    return out;
}

bool exists(const Program& program, const Interpretation& interp, GraphKind kind) {
    if (!is_model(interp, program)) {
        return false;
    }
    bool found = false;
    GraphSearch(program, interp, kind).run([&](const GraphSearch&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace

std::vector<Explanation> enumerate_explanations(const Program& program, const Interpretation& interp,
                                                std::optional<std::size_t> limit) {
    return enumerate(program, interp, GraphKind::Explanation, limit);
}

std::vector<Explanation> enumerate_support_graphs(const Program& program, const Interpretation& interp,
                                                  std::optional<std::size_t> limit) {
    return enumerate(program, interp, GraphKind::SupportGraph, limit);
}

std::size_t count_explanations(const Program& program, const Interpretation& interp) {
    std::size_t n = 0;
    GraphSearch(program, interp, GraphKind::Explanation).run([&](const GraphSearch&) {
        ++n;
        return true;
    });
    return n;
}

bool is_justified(const Program& program, const Interpretation& interp) {
    return exists(program, interp, GraphKind::Explanation);
}

bool is_supported(const Program& program, const Interpretation& interp) {
    return exists(program, interp, GraphKind::SupportGraph);
}

Chooser lexicographic_chooser() {
    Chooser c;
    c.pick_rule = [](std::span<const Rule* const> rules) {
        auto it = std::min_element(rules.begin(), rules.end(),
                                   [](const Rule* x, const Rule* y) { return x->label() < y->label(); });
        return static_cast<std::size_t>(it - rules.begin());
    };
    c.pick_atom = [](const Rule&, std::span<const Atom> atoms) {
        return static_cast<std::size_t>(std::min_element(atoms.begin(), atoms.end()) - atoms.begin());
    };
    return c;
}

Explanation construct_stable_explanation(const Program& program, const Interpretation& interp,
                                         const Chooser& chooser) {
    if (!is_stable(program, interp)) {
        throw NotStable();
    }
    const Program  red = reduct(program, interp);
    Interpretation partial;
    Labelling      labelling;
    for (;;) {
        std::vector<const Rule*> fireable;
        for (const Rule& r : red.rules()) {
            bool head_false = std::none_of(r.head().begin(), r.head().end(),
                                           [&](const Atom& a) { return partial.contains(a); });
            if (head_false && satisfies_body(partial, r)) {
                fireable.push_back(&r);
            }
        }
        if (fireable.empty()) {
            break;
        }
        const Rule&       r = *fireable.at(chooser.pick_rule(fireable));
        std::vector<Atom> options;
        std::copy_if(r.head().begin(), r.head().end(), std::back_inserter(options),
                     [&](const Atom& a) { return interp.contains(a); });
        if (options.empty()) {
            throw NotStable(); // unreachable when interp is a model of the reduct
        }
        const Atom& p = options.at(chooser.pick_atom(r, options));
        partial.insert(p);
        labelling.emplace(p, r.label());
    }
    if (partial != interp) {
        throw NotStable(); // unreachable for minimal models of the reduct
    }
    return Explanation(program, std::move(labelling));
}

const char* to_string(ModelClass c) {
    switch (c) {
        case ModelClass::Stable: return "stable";
        case ModelClass::Justified: return "justified";
        case ModelClass::Supported: return "supported";
        default: return "other";
    }
}

ModelClass ModelEntry::category() const {
    if (stable) {
        return ModelClass::Stable;
    }
    if (justified) {
        return ModelClass::Justified;
    }
    return supported ? ModelClass::Supported : ModelClass::Other;
}

std::vector<Interpretation> ModelReport::of_class(bool ModelEntry::*flag) const {
    std::vector<Interpretation> out;
    for (const ModelEntry& e : models) {
        if (e.*flag) {
            out.push_back(e.model);
        }
    }
    return out;
}

const ModelEntry* ModelReport::find(const Interpretation& model) const {
    auto it = std::find_if(models.begin(), models.end(), [&](const ModelEntry& e) { return e.model == model; });
    return it != models.end() ? &*it : nullptr;
}

ModelReport classify_models(const Program& program, std::size_t cap) {
    ModelReport report;
    for (Interpretation& m : enumerate_models(program, cap)) {
        ModelEntry e;
        e.stable       = is_stable(program, m);
        e.explanations = count_explanations(program, m);
        e.justified    = e.explanations > 0;
        e.supported    = e.justified || is_supported(program, m);
        e.model        = std::move(m);
        report.models.push_back(std::move(e));
    }
    return report;
}

} // namespace sgx
