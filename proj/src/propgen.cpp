#include <sgx/propgen.hpp>

#include <sgx/explain.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace sgx {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bit-exact across standard libraries, unlike std::uniform_*_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
    double      unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool        chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> label_ids(const std::vector<const Rule*>& rules) {
    std::vector<std::string> ids;
    for (const Rule* r : rules) {
        ids.push_back(r->label().id());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::set<Labelling> labellings(const std::vector<Explanation>& xs) {
    std::set<Labelling> out;
    for (const Explanation& x : xs) {
        out.insert(x.labelling());
    }
    return out;
}

// Minimality by enumerating every proper subset of `interp`.
bool brute_force_stable(const Program& program, const Interpretation& interp) {
    if (!is_model(interp, program)) {
        return false;
    }
    const Program     red = reduct(program, interp);
    std::vector<Atom> atoms(interp.begin(), interp.end());
    const std::size_t full = std::size_t{1} << atoms.size();
    for (std::size_t mask = 0; mask + 1 < full; ++mask) {
        Interpretation sub;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                sub.insert(atoms[i]);
            }
        }
        if (is_model(sub, red)) {
            return false;
        }
    }
    return true;
}

// Every labelling drawn from the product of support sets, checked with validate_explanation.
std::size_t brute_force_explanations(const Program& program, const Interpretation& interp, GraphKind kind) {
    std::vector<Atom>                     atoms(interp.begin(), interp.end());
    std::vector<std::vector<const Rule*>> sup;
    for (const Atom& a : atoms) {
        sup.push_back(support(interp, program, a));
        if (sup.back().empty()) {
            return 0;
        }
    }
    std::size_t              count = 0;
    std::vector<std::size_t> pick(atoms.size(), 0);
    for (;;) {
        Labelling l;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            l.emplace(atoms[i], sup[i][pick[i]]->label());
        }
        GraphRecord rec{interp, l, induced_edges(program, l)};
        count += validate_explanation(program, interp, rec, kind) ? 1 : 0;
        std::size_t i = 0;
        while (i < atoms.size() && ++pick[i] == sup[i].size()) {
            pick[i++] = 0;
        }
        if (i == atoms.size()) {
            return count;
        }
    }
}

std::string show(const std::vector<Interpretation>& ms) {
    std::string out = "[";
    for (const auto& m : ms) {
        out += (out.size() > 1 ? ", " : "") + std::string("{") + (m.empty() ? "" : m.to_string()) + "}";
    }
    return out + "]";
}

} // namespace

void GenConfig::validate() const {
    if (n_atoms < 1 || n_atoms > 8) {
        throw std::invalid_argument("n_atoms must be within 1..8");
    }
    if (n_rules > 12) {
        throw std::invalid_argument("n_rules must be at most 12");
    }
    if (max_head < 1) {
        throw std::invalid_argument("max_head must be positive");
    }
    for (double p : {p_neg, p_dneg, p_constraint}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("probabilities must lie in [0, 1]");
        }
    }
    if (p_neg + p_dneg > 1.0) {
        throw std::invalid_argument("p_neg + p_dneg must not exceed 1");
    }
}

Program random_program(const GenConfig& config) {
    config.validate();
    Rng  rng(config.seed);
    auto atom = [&] { return Atom("a" + std::to_string(rng.below(config.n_atoms) + 1)); };
    auto add  = [](AtomList& field, Atom a) {
        if (std::find(field.begin(), field.end(), a) == field.end()) {
            field.push_back(std::move(a));
        }
    };

    std::vector<Rule> rules;
    for (std::size_t k = 1; k <= config.n_rules; ++k) {
        AtomList head;
        AtomList pos;
        AtomList neg;
        AtomList dneg;
        if (!rng.chance(config.p_constraint)) {
            std::size_t size = 1 + rng.below(std::min(config.max_head, config.n_atoms));
            while (head.size() < size) {
                add(head, atom());
            }
        }
        std::size_t body = rng.below(config.max_body + 1);
        for (std::size_t i = 0; i < body; ++i) {
            double u = rng.unit();
            add(u < config.p_neg ? neg : u < config.p_neg + config.p_dneg ? dneg : pos, atom());
        }
        rules.emplace_back(Label("r" + std::to_string(k)), std::move(head), std::move(pos), std::move(neg),
                           std::move(dneg));
    }
    return validate_program(std::move(rules));
}

GenConfig fuzz_config(std::uint64_t seed, std::size_t index) {
    GenConfig c;
    c.seed = splitmix64(seed * 0x100000001b3ULL + index);
    Rng rng(splitmix64(c.seed));
    c.n_atoms = 2 + rng.below(4); // 2..5
    c.n_rules = 1 + rng.below(7); // 1..7
    switch (index % 4) {
        case 0: // Horn
            c.max_head = 1;
            c.p_neg    = 0.0;
            c.p_dneg   = 0.0;
            break;
        case 1: // normal, with double negation
            c.max_head = 1;
            c.p_neg    = 0.3;
            c.p_dneg   = 0.15;
            break;
        case 2:
            c.max_head = 2;
            c.p_neg    = 0.2;
            c.p_dneg   = 0.1;
            break;
        default:
            c.max_head = 3;
            c.p_neg    = 0.3;
            c.p_dneg   = 0.1;
            break;
    }
    return c;
}

OracleReport oracle_check(const Program& program, std::size_t cap) {
    const std::size_t n = program.signature().size();
    if (n > cap) {
        throw SignatureTooLarge(n, cap);
    }
    OracleReport report;
    auto         fail = [&](std::string property, std::optional<Interpretation> model, std::string detail) {
        report.violations.push_back({std::move(property), std::move(model), std::move(detail)});
    };

    // Every subset of the signature.
    std::vector<Interpretation> subsets;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Interpretation s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                s.insert(program.signature()[i]);
            }
        }
        subsets.push_back(std::move(s));
    }
    sort_canonical(subsets);

    for (const Interpretation& s : subsets) {
        if (!is_model(s, program)) {
            continue;
        }
        report.models.push_back(s);
        std::size_t justified = brute_force_explanations(program, s, GraphKind::Explanation);
        std::size_t supported = brute_force_explanations(program, s, GraphKind::SupportGraph);
        if (brute_force_stable(program, s)) {
            report.stable.push_back(s);
        }
        if (justified > 0) {
            report.justified.push_back(s);
        }
        if (supported > 0) {
            report.supported.push_back(s);
        }

        // Enumeration and existence checks agree with the brute-force counts.
        std::size_t enumerated = enumerate_explanations(program, s).size();
        if (enumerated != justified) {
            fail("explanation count", s,
                 "enumerated " + std::to_string(enumerated) + ", brute force " + std::to_string(justified));
        }
        if (enumerate_support_graphs(program, s).size() != supported) {
            fail("support graph count", s, "enumeration disagrees with brute force");
        }
        if (is_justified(program, s) != (justified > 0) || is_supported(program, s) != (supported > 0)) {
            fail("existence checks", s, "is_justified/is_supported disagree with brute force");
        }

        // Explanations are the same under the program and under its reduct.
        const Program red = reduct(program, s);
        if (labellings(enumerate_explanations(program, s)) != labellings(enumerate_explanations(red, s))) {
            fail("explanations under reduct", s, "explanation sets differ");
        }
        for (const Atom& p : s) {
            if (label_ids(support(s, program, p)) != label_ids(support(s, red, p))) {
                fail("support under reduct", s, "support labels differ for " + p.name());
            }
        }
    }

    auto subset_of = [](const std::vector<Interpretation>& xs, const std::vector<Interpretation>& ys) {
        return std::all_of(xs.begin(), xs.end(),
                           [&](const Interpretation& x) { return std::find(ys.begin(), ys.end(), x) != ys.end(); });
    };

    if (enumerate_models(program, cap) != report.models) {
        fail("model enumeration", std::nullopt, "search and brute force disagree");
    }
    if (auto sm = enumerate_stable(program, cap); sm != report.stable) {
        fail("stable enumeration", std::nullopt, "search " + show(sm) + ", brute force " + show(report.stable));
    }
    if (!subset_of(report.stable, report.justified)) {
        fail("stable within justified", std::nullopt, show(report.stable) + " vs " + show(report.justified));
    }
    if (!subset_of(report.justified, report.supported)) {
        fail("justified within supported", std::nullopt, show(report.justified) + " vs " + show(report.supported));
    }
    for (const Interpretation& s : report.stable) {
        if (!is_stable(program, s)) {
            fail("stable membership", s, "is_stable rejects a stable model");
        }
        Explanation e = construct_stable_explanation(program, s);
        if (!validate_explanation(program, s, e)) {
            fail("constructed explanation", s, "construct_stable_explanation output is invalid");
        }
    }

    if (program.is_non_disjunctive()) {
        if (report.stable != report.justified) {
            fail("non-disjunctive stable == justified", std::nullopt,
                 show(report.stable) + " vs " + show(report.justified));
        }
        std::vector<Interpretation> fixpoints;
        for (const Interpretation& s : subsets) {
            if (tp_step(program, s) == s) {
                if (is_model(s, program)) {
                    fixpoints.push_back(s);
                }
                else if (!program.has_constraints()) {
                    fail("fixpoints are models", s, "T_P fixpoint violates a rule");
                }
            }
        }
        if (fixpoints != report.supported) {
            fail("supported == T_P fixpoints", std::nullopt, show(report.supported) + " vs " + show(fixpoints));
        }
    }

    if (program.is_horn()) {
        Interpretation least = least_model(program);
        if (is_model(least, program)) {
            std::vector<Interpretation> expected{least};
            if (report.justified != expected || report.stable != expected) {
                fail("Horn least model", least, "justified " + show(report.justified));
            }
        }
        else if (!report.justified.empty() || !report.models.empty()) {
            fail("inconsistent Horn", std::nullopt, "least model violates a constraint yet models exist");
        }
    }
    return report;
}

Program shrink_program(const Program& program, const std::function<bool(const Program&)>& fails) {
    std::vector<Rule> rules = program.rules();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            std::vector<Rule> fewer = rules;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            if (fails(validate_program(fewer))) {
                rules   = std::move(fewer);
                changed = true;
                break;
            }
        }
    }
    return validate_program(std::move(rules));
}

} // namespace sgx
