// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero when any criterion fails.
#include <sgx/cli.hpp>
#include <sgx/encoding.hpp>
#include <sgx/explain.hpp>
#include <sgx/parser.hpp>
#include <sgx/proof.hpp>
#include <sgx/propgen.hpp>
#include <sgx/semantics.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sgx;

namespace {

std::string fixture_path(const std::string& name) { return std::string(SGX_FIXTURES) + "/" + name; }

Program fixture(const std::string& name) {
    std::ifstream     in(fixture_path(name), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

Interpretation M(std::initializer_list<std::string_view> names) { return Interpretation::of(names); }

Labelling labelling(std::initializer_list<std::pair<const char*, const char*>> label_atom) {
    Labelling l;
    for (auto [label, atom] : label_atom) {
        l.emplace(Atom(atom), Label(label));
    }
    return l;
}

// Collects failed expectations of one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

int failed = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Check&)>& body) {
    Check check;
    auto  start = std::chrono::steady_clock::now();
    try {
        body(check);
    }
    catch (const std::exception& e) {
        check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < budget_s, "over time budget");
    bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %d %s (%.3fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs, budget_s);
    for (const auto& f : check.failures) {
        std::printf("       %s\n", f.c_str());
    }
}

std::vector<Interpretation> without(const std::vector<Interpretation>& ms, const char* atom) {
    std::vector<Interpretation> out;
    for (const auto& m : ms) {
        if (!m.contains(Atom(atom))) {
            out.push_back(m);
        }
    }
    return out;
}

std::string model_arg(const Interpretation& m) {
    std::string out;
    for (const Atom& a : m) {
        out += (out.empty() ? "" : ",") + a.name();
    }
    return out;
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str() + "\x1f" + err.str()};
}

} // namespace

int main() {
    criterion(1, "ex1: two explanations of {a,d}", 1, [](Check& c) {
        Program p = fixture("ex1.lp");
        c.expect(without(enumerate_models(p), "c") == std::vector<Interpretation>{M({"b"}), M({"a", "d"}), M({"b", "d"}), M({"a", "b", "d"})},
                 "models without c");
        ModelReport report = classify_models(p);
        c.expect(report.justified() == std::vector<Interpretation>{M({"b"}), M({"a", "d"})}, "justified models");
        auto es = enumerate_explanations(p, M({"a", "d"}));
        c.expect(es.size() == 2, "two explanations of {a,d}");
        if (es.size() == 2) {
            c.expect(es[0].labelling() == labelling({{"l1", "a"}, {"l2", "d"}}) &&
                         es[0].edges() == EdgeSet{{Atom("a"), Atom("d")}},
                     "first explanation l1:a, l2:d with edge a->d");
            c.expect(es[1].labelling() == labelling({{"l1", "a"}, {"l3", "d"}}) && es[1].edges().empty(),
                     "second explanation l1:a, l3:d without edges");
        }
        c.expect(count_explanations(p, M({"b", "d"})) == 0, "{b,d} unexplained");
        c.expect(count_explanations(p, M({"a", "b", "d"})) == 0, "{a,b,d} unexplained");
    });

    criterion(2, "chain program explanation and proof of r", 1, [](Check& c) {
        Program p = fixture("ex2.lp");
        c.expect(classify_models(p).justified() == std::vector<Interpretation>{M({"p", "q", "r"})}, "unique justified model");
        auto es = enumerate_explanations(p, M({"p", "q", "r"}));
        c.expect(es.size() == 1, "unique explanation");
        if (es.size() != 1) {
            return;
        }
        c.expect(es[0].edges() == EdgeSet{{Atom("p"), Atom("q")}, {Atom("p"), Atom("r")}, {Atom("q"), Atom("r")}},
                 "edges p->q, p->r, q->r");
        ProofTree t = build_proof(p, es[0], Atom("r"));
        c.expect(t.atom == Atom("r") && t.label == Label("l3"), "root (r, l3)");
        c.expect(t.premises.size() == 2, "two premises");
        if (t.premises.size() == 2) {
            c.expect(t.premises[0].atom == Atom("p") && t.premises[1].atom == Atom("q"), "premises [p, q]");
            c.expect(t.premises[1].premises.size() == 1 && t.premises[0] == t.premises[1].premises[0],
                     "both proofs of p identical");
            c.expect(t.premises[0] == ProofTree{Atom("p"), Label("l1"), {}}, "p by l1 from no premises");
        }
    });

    criterion(3, "disjunctive program: justified but not stable", 1, [](Check& c) {
        Program p      = fixture("disj.lp");
        auto    models = enumerate_models(p);
        c.expect(models.size() == 5, "five classical models");
        const std::vector<std::pair<Interpretation, std::size_t>> counts{
            {M({"a"}), 2}, {M({"a", "b"}), 1}, {M({"a", "c"}), 1}, {M({"b", "c"}), 1}, {M({"a", "b", "c"}), 0}};
        for (const auto& [m, n] : counts) {
            c.expect(count_explanations(p, m) == n, "explanation count of {" + m.to_string() + "}");
        }
        c.expect(enumerate_stable(p) == std::vector<Interpretation>{M({"a"}), M({"b", "c"})}, "stable models");
        c.expect(is_justified(p, M({"a", "b"})) && !is_stable(p, M({"a", "b"})), "{a,b} justified, not stable");
    });

    criterion(4, "firing squads n=1..5: 2^n explanations and answer sets", 10, [](Check& c) {
        for (int n = 1; n <= 5; ++n) {
            Program p      = fixture("squads" + std::to_string(n) + ".lp");
            auto    stable = enumerate_stable(p);
            std::string tag = "n=" + std::to_string(n) + ": ";
            c.expect(stable.size() == 1, tag + "unique stable model");
            if (stable.size() != 1) {
                continue;
            }
            auto expected = static_cast<std::size_t>(1) << n;
            c.expect(stable[0].size() == static_cast<std::size_t>(3 * n + 1), tag + "3n+1 atoms");
            c.expect(count_explanations(p, stable[0]) == expected, tag + "2^n explanations");
            BijectionReport b = crosscheck_bijection(p, stable[0]);
            c.expect(b.ok() && b.matched == expected && b.answer_sets == expected, tag + "bijection of size 2^n");
        }
    });

    criterion(5, "supported model that is not justified", 1, [](Check& c) {
        Program     p      = fixture("spnj.lp");
        ModelReport report = classify_models(p);
        c.expect(report.supported() == std::vector<Interpretation>{M({}), M({"b", "c"})}, "supported models");
        c.expect(report.justified() == std::vector<Interpretation>{M({})}, "justified models");
        c.expect(report.stable() == std::vector<Interpretation>{M({})}, "stable models");
        auto graphs = enumerate_support_graphs(p, M({"b", "c"}));
        c.expect(graphs.size() == 1, "one support graph for {b,c}");
        if (graphs.size() == 1) {
            c.expect(graphs[0].labelling() == labelling({{"l1", "b"}, {"l2", "c"}}), "labelling l1:b, l2:c");
            c.expect(!is_acyclic(graphs[0].model(), graphs[0].edges()), "graph has a cycle");
        }
    });

    criterion(6, "switch and light: encoding has one answer set", 1, [](Check& c) {
        Program p      = fixture("switch.lp");
        auto    stable = enumerate_stable(p);
        c.expect(stable == std::vector<Interpretation>{M({"switch", "light"})}, "unique stable model");
        auto es = enumerate_explanations(p, M({"switch", "light"}));
        c.expect(es.size() == 1, "unique explanation");
        if (es.size() == 1) {
            c.expect(es[0].labelling() == labelling({{"l1", "switch"}, {"l2", "light"}}) &&
                         es[0].edges() == EdgeSet{{Atom("switch"), Atom("light")}},
                     "l1:switch -> l2:light");
        }
        auto [code, text] = run_cli({"encode", fixture_path("switch.lp"), "--model", "switch,light"});
        c.expect(code == 0 && text.find("as(switch).") != std::string::npos, "encode command output");
        GroundEncoding enc = ground_encoding(p, M({"switch", "light"}));
        auto           js  = answer_sets_of_encoding(p, M({"switch", "light"}));
        c.expect(js.size() == 1, "exactly one answer set");
        if (js.size() == 1) {
            c.expect(js[0].contains(enc.fired.at({Label("l1"), Atom("switch")})), "contains f(l1,switch)");
            c.expect(js[0].contains(enc.fired.at({Label("l2"), Atom("light")})), "contains f(l2,light)");
        }
    });

    criterion(7, "property suite over 300 random programs", 60, [](Check& c) {
        std::size_t programs = 0, non_disjunctive = 0, horn = 0, bijections = 0, violations = 0;
        for (std::size_t i = 0; i < 300; ++i) {
            Program p = random_program(fuzz_config(1, i));
            if (p.signature().size() > 5 || p.rules().size() > 7) {
                c.expect(false, "generated program exceeds bounds");
            }
            ++programs;
            non_disjunctive += p.is_non_disjunctive() ? 1 : 0;
            horn += p.is_horn() ? 1 : 0;
            OracleReport r = oracle_check(p);
            for (const auto& v : r.violations) {
                ++violations;
                c.expect(false, "case " + std::to_string(i) + ": " + v.property + " " + v.detail);
            }
            for (const auto& s : r.stable) {
                BijectionReport b = crosscheck_bijection(p, s);
                ++bijections;
                if (!b.ok()) {
                    ++violations;
                    c.expect(false, "case " + std::to_string(i) + ": bijection fails for {" + s.to_string() + "}");
                }
            }
        }
        std::printf("       %zu programs (%zu non-disjunctive, %zu Horn), %zu bijections, %zu violations\n", programs,
                    non_disjunctive, horn, bijections, violations);
        c.expect(non_disjunctive > 0 && horn > 0 && non_disjunctive < programs, "all program classes exercised");
    });

    criterion(8, "every command is deterministic on every fixture", 60, [](Check& c) {
        const std::vector<std::string> files{"ex1.lp", "ex2.lp", "disj.lp", "headcycle.lp", "spnj.lp", "switch.lp",
                                             "empty.lp", "squads1.lp", "squads2.lp", "squads3.lp", "squads4.lp",
                                             "squads5.lp"};
        std::vector<std::vector<std::string>> invocations;
        for (const auto& f : files) {
            std::string path = fixture_path(f);
            for (const char* cmd : {"models", "stable", "supported", "justified"}) {
                for (const char* fmt : {"text", "json"}) {
                    invocations.push_back({cmd, path, "--format", fmt});
                }
            }
            invocations.push_back({"verify", path});
            invocations.push_back({"verify", path, "--format", "json"});
            Program p = fixture(f);
            for (const auto& m : enumerate_models(p)) {
                std::string arg = model_arg(m);
                for (const char* fmt : {"text", "json", "dot"}) {
                    invocations.push_back({"explain", path, "--model", arg, "--format", fmt});
                }
                for (const Atom& a : m) {
                    for (const char* fmt : {"text", "json"}) {
                        invocations.push_back({"prove", path, "--model", arg, "--atom", a.name(), "--format", fmt});
                    }
                }
                invocations.push_back({"encode", path, "--model", arg, "--force"});
                invocations.push_back({"encode", path, "--model", arg, "--force", "--ground"});
            }
        }
        invocations.push_back({"fuzz", "--seed", "7", "--cases", "100"});
        for (const auto& args : invocations) {
            auto first  = run_cli(args);
            auto second = run_cli(args);
            if (first != second) {
                std::string cmd;
                for (const auto& a : args) {
                    cmd += a + " ";
                }
                c.expect(false, "differs: " + cmd);
            }
        }
        std::printf("       %zu invocations compared\n", invocations.size());
    });

    std::printf("%s: %d of 8 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed == 0 ? 0 : 1;
}
