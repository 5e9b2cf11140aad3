#include <sgx/parser.hpp>
#include <sgx/propgen.hpp>
#include <sgx/semantics.hpp>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sgx;
using sgx::test::fixture;
using sgx::test::M;

namespace {
const Rule& rule(const Program& p, const char* label) { return *p.find(Label(label)); }

std::vector<std::string> labels(const std::vector<const Rule*>& rules) {
    std::vector<std::string> out;
    for (const Rule* r : rules) {
        out.push_back(r->label().id());
    }
    return out;
}

GenConfig config(std::uint64_t seed, std::size_t max_head) {
    GenConfig c;
    c.seed     = seed;
    c.n_atoms  = 5;
    c.n_rules  = 7;
    c.max_head = max_head;
    return c;
}
} // namespace

TEST_CASE("satisfies_body", "[semantics]") {
    Program ex1 = fixture("ex1.lp");
    CHECK(satisfies_body(M({"a", "d"}), rule(ex1, "l2")));
    CHECK_FALSE(satisfies_body(M({"b", "d"}), rule(ex1, "l3")));
    CHECK_FALSE(satisfies_body(M({"b", "d"}), rule(ex1, "l2")));
    CHECK(satisfies_body(M({}), rule(fixture("ex2.lp"), "l1")));
    CHECK(satisfies_body(M({"x", "y"}), rule(fixture("ex2.lp"), "l1")));
    // Double negation is read classically.
    Program choice = parse_program("l: p :- not not p.");
    CHECK(satisfies_body(M({"p"}), rule(choice, "l")));
    CHECK_FALSE(satisfies_body(M({}), rule(choice, "l")));
}

TEST_CASE("is_model", "[semantics]") {
    Program ex1 = fixture("ex1.lp");
    CHECK(is_model(M({"a", "b", "d"}), ex1));
    CHECK_FALSE(is_model(M({"a"}), ex1));
    CHECK(is_model(M({}), fixture("spnj.lp")));
    CHECK_FALSE(is_model(M({"a"}), parse_program("c: #false :- a. l: a.")));
}

TEST_CASE("enumerate_models", "[semantics]") {
    CHECK(enumerate_models(fixture("disj.lp")) ==
          std::vector<Interpretation>{M({"a"}), M({"a", "b"}), M({"a", "c"}), M({"b", "c"}), M({"a", "b", "c"})});
    CHECK(enumerate_models(parse_program("")) == std::vector<Interpretation>{M({})});

    std::vector<Interpretation> without_c;
    for (const auto& m : enumerate_models(fixture("ex1.lp"))) {
        if (!m.contains(Atom("c"))) {
            without_c.push_back(m);
        }
    }
    CHECK(without_c == std::vector<Interpretation>{M({"b"}), M({"a", "d"}), M({"b", "d"}), M({"a", "b", "d"})});

    CHECK_THROWS_AS(enumerate_models(fixture("squads5.lp"), 10), SignatureTooLarge);
    CHECK(enumerate_models(fixture("squads5.lp"), 16).size() == 1);
}

TEST_CASE("reduct", "[semantics]") {
    Program ex1 = fixture("ex1.lp");
    CHECK(reduct(ex1, M({"a", "d"})) == parse_program("l1: a ; b.\nl2: d :- a.\nl3: d."));
    CHECK(reduct(ex1, M({"a", "b", "c", "d"})) == parse_program("l1: a ; b."));
    Program ex2 = fixture("ex2.lp");
    CHECK(reduct(ex2, M({"q"})) == ex2);
    // Choice rules survive only when their atom is true.
    Program choice = parse_program("l: p :- q, not not p.");
    CHECK(reduct(choice, M({"p", "q"})) == parse_program("l: p :- q."));
    CHECK(reduct(choice, M({"q"})).empty());
}

TEST_CASE("support", "[semantics]") {
    Program ex1 = fixture("ex1.lp");
    CHECK(support(M({"b", "d"}), ex1, Atom("d")).empty());
    CHECK(labels(support(M({"a", "b", "d"}), ex1, Atom("a"))) == std::vector<std::string>{"l1"});
    CHECK(labels(support(M({"a", "b", "d"}), ex1, Atom("b"))) == std::vector<std::string>{"l1"});
    CHECK(labels(support(M({"a", "d"}), ex1, Atom("d"))) == std::vector<std::string>{"l2", "l3"});
    for (const auto& m : oracle::all_subsets(ex1.signature())) {
        CHECK(support(m, ex1, Atom("c")).empty());
    }
}

TEST_CASE("tp_step", "[semantics]") {
    CHECK_THROWS_AS(tp_step(fixture("spnj.lp"), M({})), NotNonDisjunctive);
    CHECK(tp_step(fixture("switch.lp"), M({"switch", "light"})) == M({"switch", "light"}));
    CHECK(tp_step(fixture("ex2.lp"), M({})) == M({"p"}));
    CHECK(tp_step(fixture("ex2.lp"), M({"p"})) == M({"p", "q"}));
    CHECK(least_model(fixture("ex2.lp")) == M({"p", "q", "r"}));
    CHECK_THROWS_AS(least_model(fixture("switch.lp")), NotHorn);
}

TEST_CASE("stable models", "[semantics]") {
    CHECK(enumerate_stable(fixture("disj.lp")) == std::vector<Interpretation>{M({"a"}), M({"b", "c"})});
    CHECK(enumerate_stable(fixture("ex2.lp")) == std::vector<Interpretation>{M({"p", "q", "r"})});
    CHECK(enumerate_stable(fixture("switch.lp")) == std::vector<Interpretation>{M({"switch", "light"})});
    CHECK(enumerate_stable(fixture("ex1.lp")) == std::vector<Interpretation>{M({"b"}), M({"a", "d"})});
    CHECK(enumerate_stable(fixture("headcycle.lp")) == std::vector<Interpretation>{M({"p", "q"})});
    CHECK(enumerate_stable(fixture("spnj.lp")) == std::vector<Interpretation>{M({})});
    CHECK(enumerate_stable(parse_program("l1: {p}.")) == std::vector<Interpretation>{M({}), M({"p"})});
    CHECK(enumerate_stable(parse_program("l1: p :- not q. l2: q :- not p.")) ==
          std::vector<Interpretation>{M({"p"}), M({"q"})});
    CHECK(enumerate_stable(parse_program("l1: p :- not p.")).empty());
    CHECK_THROWS_AS(enumerate_stable(fixture("squads5.lp"), 12), SignatureTooLarge);

    CHECK(is_stable(fixture("ex1.lp"), M({"a", "d"})));
    CHECK_FALSE(is_stable(fixture("ex1.lp"), M({"a", "b", "d"})));
    CHECK(is_stable(parse_program(""), M({})));
    CHECK_FALSE(is_stable(parse_program(""), M({"z"})));
    CHECK_FALSE(is_stable(fixture("disj.lp"), M({"a", "b"})));
}

TEST_CASE("search agrees with brute force on random programs", "[semantics][property]") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenConfig c       = config(seed, 1 + seed % 3);
        c.p_dneg          = 0.2;
        c.p_constraint    = 0.15;
        Program p         = random_program(c);
        INFO(render_program(p));
        auto expected_models = oracle::models(p);
        CHECK(enumerate_models(p) == expected_models);
        CHECK(enumerate_stable(p) == oracle::stable_models(p));
        for (const auto& m : oracle::all_subsets(p.signature())) {
            CHECK(is_stable(p, m) == oracle::stable(p.rules(), m));
        }
    }
}

TEST_CASE("semantic invariants", "[semantics][property]") {
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        GenConfig c = config(seed, 1 + seed % 3);
        Program   p = random_program(c);
        INFO(render_program(p));
        for (const auto& m : oracle::all_subsets(p.signature())) {
            Program red = reduct(p, m);
            CHECK(red.is_positive());
            CHECK(reduct(red, m) == red);
            if (is_model(m, p)) {
                for (const Atom& a : m) {
                    CHECK(labels(support(m, red, a)) == labels(support(m, p, a)));
                }
            }
        }
        for (const auto& s : enumerate_stable(p)) {
            CHECK(is_model(s, p));
            CHECK(is_model(s, reduct(p, s)));
        }
        if (p.is_horn() && is_model(least_model(p), p)) {
            CHECK(enumerate_stable(p) == std::vector<Interpretation>{least_model(p)});
        }
    }
}
