#include <sgx/explain.hpp>
#include <sgx/parser.hpp>
#include <sgx/proof.hpp>
#include <sgx/propgen.hpp>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

using namespace sgx;
using sgx::oracle::labelling;
using sgx::test::fixture;
using sgx::test::M;

namespace {
ProofTree leaf(const char* atom, const char* label) { return {Atom(atom), Label(label), {}}; }

// Every node is justified by its label: the rule has the atom in its head and its
// positive body is exactly the list of premise conclusions.
bool coherent(const Program& p, const Explanation& e, const ProofTree& t) {
    const Rule* r = p.find(t.label);
    if (r == nullptr || !r->has_in_head(t.atom) || e.label_of(t.atom) != t.label ||
        r->pos_body().size() != t.premises.size()) {
        return false;
    }
    for (std::size_t i = 0; i < t.premises.size(); ++i) {
        if (t.premises[i].atom != r->pos_body()[i] || !coherent(p, e, t.premises[i])) {
            return false;
        }
    }
    return true;
}
} // namespace

TEST_CASE("proof of r in the chain program", "[proof]") {
    Program     p = fixture("ex2.lp");
    Explanation e(p, labelling({{"l1", "p"}, {"l2", "q"}, {"l3", "r"}}));
    ProofTree   proof_p = leaf("p", "l1");
    ProofTree   proof_q{Atom("q"), Label("l2"), {proof_p}};
    ProofTree   expected{Atom("r"), Label("l3"), {proof_p, proof_q}};
    ProofTree   got = build_proof(p, e, Atom("r"));
    CHECK(got == expected);
    CHECK(got.premises[0] == got.premises[1].premises[0]);
    CHECK(proof_size(got) == 4);
    CHECK(render_proof(got, ProofFormat::Ascii) == "r  (l3)\n"
                                                   "  p  (l1)\n"
                                                   "    ⊤\n"
                                                   "  q  (l2)\n"
                                                   "    p  (l1)\n"
                                                   "      ⊤\n");
    CHECK(build_proof(p, e, Atom("p")) == proof_p);
    CHECK_THROWS_AS(build_proof(p, e, Atom("z")), AtomNotInModel);
}

TEST_CASE("proof rendering", "[proof]") {
    Program     sw = fixture("switch.lp");
    Explanation e(sw, labelling({{"l1", "switch"}, {"l2", "light"}}));
    ProofTree   t = build_proof(sw, e, Atom("light"));
    CHECK(t == ProofTree{Atom("light"), Label("l2"), {leaf("switch", "l1")}});
    auto j = nlohmann::json::parse(render_proof(t, ProofFormat::Json));
    CHECK(j["atom"] == "light");
    CHECK(j["label"] == "l2");
    CHECK(j["premises"][0]["atom"] == "switch");
    CHECK(j["premises"][0]["premises"].empty());
    CHECK(render_proof(leaf("p", "l1"), ProofFormat::Json) == R"({"atom":"p","label":"l1","premises":[]})");
    CHECK(render_proof(leaf("p", "l1"), ProofFormat::Ascii) == "p  (l1)\n  ⊤\n");
}

TEST_CASE("cyclic support graphs have no proofs", "[proof]") {
    Program     spnj = fixture("spnj.lp");
    Explanation g(spnj, labelling({{"l1", "b"}, {"l2", "c"}}), GraphKind::SupportGraph);
    CHECK_THROWS_AS(build_proof(spnj, g, Atom("b")), Error);
}

TEST_CASE("proofs are coherent derivations", "[proof][property]") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Program p = random_program(fuzz_config(5, seed));
        INFO(render_program(p));
        for (const auto& m : enumerate_models(p)) {
            for (const auto& e : enumerate_explanations(p, m, 4)) {
                for (const Atom& a : m) {
                    ProofTree t = build_proof(p, e, a);
                    CHECK(coherent(p, e, t));
                    // The conclusion follows by one modus ponens step from the
                    // premises under the labelling rule.
                    std::set<Atom> premises;
                    for (const auto& q : t.premises) {
                        premises.insert(q.atom);
                    }
                    const Rule* r = p.find(t.label);
                    CHECK(std::all_of(r->pos_body().begin(), r->pos_body().end(),
                                      [&](const Atom& q) { return premises.contains(q); }));
                    CHECK(satisfies_body(m, *r));
                }
            }
        }
    }
}
