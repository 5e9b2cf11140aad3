#include <sgx/cli.hpp>

#include <sgx/encoding.hpp>
#include <sgx/explain.hpp>
#include <sgx/io.hpp>
#include <sgx/parser.hpp>
#include <sgx/proof.hpp>
#include <sgx/propgen.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace sgx::cli {

namespace {

struct Config {
    std::string                command;
    std::string                input_path;
    std::optional<std::string> model;
    std::string                format = "text";
    std::optional<std::size_t> limit;
    std::optional<std::string> atom;
    std::optional<std::string> out_path;
    bool                       ground = false;
    bool                       force  = false;
    std::size_t                cap    = kDefaultSignatureCap;
    std::uint64_t              seed   = 1;
    std::size_t                cases  = 300;
};

// Failure with a fixed exit status; the message goes to stderr.
struct Exit {
    int         code;
    std::string message;
};

Program load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Exit{kParseError, "cannot read '" + path + "'"};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_program(buf.str());
    }
    catch (const SyntaxError& e) {
        throw Exit{kParseError, path + ":" + e.what()};
    }
}

Interpretation required_model(const Config& c) {
    if (!c.model) {
        throw Exit{kParseError, "--model is required for '" + c.command + "'"};
    }
    return parse_model(*c.model);
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (c.format == f) {
            return;
        }
    }
    throw Exit{kParseError, "format '" + c.format + "' is not supported by '" + c.command + "'"};
}

void print_models(const Config& c, const std::vector<Interpretation>& models, std::ostream& out) {
    require_format(c, {"text", "json"});
    if (c.format == "json") {
        out << models_to_json(models) << '\n';
        return;
    }
    for (const Interpretation& m : models) {
        out << m.to_string() << '\n';
    }
}

int cmd_models(const Config& c, std::ostream& out) {
    Program p = load(c.input_path);
    if (c.command == "models") {
        print_models(c, enumerate_models(p, c.cap), out);
    }
    else if (c.command == "stable") {
        print_models(c, enumerate_stable(p, c.cap), out);
    }
    else {
        ModelReport r = classify_models(p, c.cap);
        print_models(c, c.command == "justified" ? r.justified() : r.supported(), out);
    }
    return kOk;
}

int cmd_explain(const Config& c, std::ostream& out) {
    Program        p = load(c.input_path);
    Interpretation m = required_model(c);
    require_format(c, {"text", "json", "dot"});
    auto xs = enumerate_explanations(p, m, c.limit);
    if (c.format == "json") {
        out << explanations_to_json(m, xs) << '\n';
    }
    else if (c.format == "dot") {
        out << explanations_to_dot(xs);
    }
    else {
        out << explanations_to_text(xs);
    }
    return kOk;
}

int cmd_prove(const Config& c, std::ostream& out) {
    Program        p = load(c.input_path);
    Interpretation m = required_model(c);
    require_format(c, {"text", "json"});
    if (!c.atom) {
        throw Exit{kParseError, "--atom is required for 'prove'"};
    }
    Atom atom(*c.atom);
    if (!is_model(m, p)) {
        throw NotAModel();
    }
    if (!m.contains(atom)) {
        throw AtomNotInModel(atom.name());
    }
    auto xs = enumerate_explanations(p, m, c.limit);
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["atom"]   = atom.name();
        j["proofs"] = nlohmann::ordered_json::array();
        for (const Explanation& e : xs) {
            j["proofs"].push_back(nlohmann::ordered_json::parse(render_proof(build_proof(p, e, atom), ProofFormat::Json)));
        }
        j["count"] = xs.size();
        out << j.dump() << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? "\n" : "") << "proof " << i + 1 << '\n' << render_proof(build_proof(p, xs[i], atom), ProofFormat::Ascii);
    }
    return kOk;
}

int cmd_encode(const Config& c, std::ostream& out) {
    Program        p = load(c.input_path);
    Interpretation m = required_model(c);
    std::string    text;
    if (c.ground) {
        text = render_program(ground_encoding(p, m, c.force).program);
    }
    else {
        if (c.force ? !is_model(m, p) : !is_stable(p, m)) {
            if (c.force) {
                throw NotAModel();
            }
            throw NotStable();
        }
        text = emit_model_facts(m) + emit_xP(p);
    }
    if (c.out_path) {
        std::ofstream file(*c.out_path, std::ios::binary);
        if (!file) {
            throw Exit{kParseError, "cannot write '" + *c.out_path + "'"};
        }
        file << text;
    }
    else {
        out << text;
    }
    return kOk;
}

std::string describe(const Violation& v) {
    std::string s = v.property;
    if (v.model) {
        s += " at {" + (v.model->empty() ? std::string() : v.model->to_string()) + "}";
    }
    return s + ": " + v.detail;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
    Program p = load(c.input_path);
    require_format(c, {"text", "json"});
    OracleReport                 oracle = oracle_check(p, c.cap);
    std::vector<BijectionReport> bijections;
    for (const Interpretation& m : oracle.stable) {
        bijections.push_back(crosscheck_bijection(p, m));
    }
    bool ok = oracle.ok() && std::all_of(bijections.begin(), bijections.end(), [](const auto& b) { return b.ok(); });

    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["models"]    = oracle.models.size();
        j["stable"]    = oracle.stable.size();
        j["justified"] = oracle.justified.size();
        j["supported"] = oracle.supported.size();
        j["bijections"] = nlohmann::ordered_json::array();
        for (const BijectionReport& b : bijections) {
            nlohmann::ordered_json x;
            x["model"] = nlohmann::ordered_json::array();
            for (const Atom& a : b.model) {
                x["model"].push_back(a.name());
            }
            x["explanations"] = b.explanations;
            x["answer_sets"]  = b.answer_sets;
            x["ok"]           = b.ok();
            x["problems"]     = b.problems;
            j["bijections"].push_back(std::move(x));
        }
        j["violations"] = nlohmann::ordered_json::array();
        for (const Violation& v : oracle.violations) {
            j["violations"].push_back(describe(v));
        }
        j["ok"] = ok;
        out << j.dump() << '\n';
    }
    else {
        out << "models: " << oracle.models.size() << ", stable: " << oracle.stable.size()
            << ", justified: " << oracle.justified.size() << ", supported: " << oracle.supported.size() << '\n';
        for (const BijectionReport& b : bijections) {
            out << "stable {" << (b.model.empty() ? "" : b.model.to_string()) << "}: explanations " << b.explanations
                << ", answer sets " << b.answer_sets << ", bijection " << (b.ok() ? "ok" : "FAILED") << '\n';
            for (const std::string& problem : b.problems) {
                out << "  " << problem << '\n';
            }
        }
        for (const Violation& v : oracle.violations) {
            out << "violation: " << describe(v) << '\n';
        }
        out << (ok ? "verify: ok" : "verify: FAILED") << '\n';
    }
    if (!ok) {
        err << "property violation; counterexample: " << c.input_path << '\n';
        return kViolation;
    }
    return kOk;
}

// Empty when the program passes every check.
std::vector<std::string> check_program(const Program& p, std::size_t cap) {
    std::vector<std::string> problems;
    OracleReport             oracle = oracle_check(p, cap);
    for (const Violation& v : oracle.violations) {
        problems.push_back(describe(v));
    }
    for (const Interpretation& m : oracle.stable) {
        BijectionReport b = crosscheck_bijection(p, m);
        if (!b.ok()) {
            problems.push_back("bijection at {" + (m.empty() ? std::string() : m.to_string()) + "}: " +
                               std::to_string(b.explanations) + " explanations, " + std::to_string(b.answer_sets) +
                               " answer sets");
            problems.insert(problems.end(), b.problems.begin(), b.problems.end());
        }
    }
    return problems;
}

int cmd_fuzz(const Config& c, std::ostream& out, std::ostream& err) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        Program p        = random_program(fuzz_config(c.seed, i));
        auto    problems = check_program(p, c.cap);
        if (problems.empty()) {
            continue;
        }
        Program small = shrink_program(p, [&](const Program& q) { return !check_program(q, c.cap).empty(); });
        namespace fs  = std::filesystem;
        fs::path dir  = c.out_path ? fs::path(*c.out_path) : fs::current_path();
        fs::create_directories(dir);
        fs::path file = dir / ("sgx_fuzz_" + std::to_string(c.seed) + "_" + std::to_string(i) + ".lp");
        std::ofstream(file, std::ios::binary) << render_program(small);
        out << "fuzz seed " << c.seed << ": violation in case " << i << '\n';
        for (const std::string& problem : check_program(small, c.cap)) {
            out << "  " << problem << '\n';
        }
        err << "property violation; counterexample: " << file.string() << '\n';
        return kViolation;
    }
    out << "fuzz seed " << c.seed << ": " << c.cases << " cases, 0 violations\n";
    return kOk;
}

int dispatch(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.command == "explain") return cmd_explain(c, out);
    if (c.command == "prove") return cmd_prove(c, out);
    if (c.command == "encode") return cmd_encode(c, out);
    if (c.command == "verify") return cmd_verify(c, out, err);
    if (c.command == "fuzz") return cmd_fuzz(c, out, err);
    return cmd_models(c, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config   c;
    CLI::App app{"sgx: support graphs, explanations and proofs for labelled logic programs", "sgx"};
    app.require_subcommand(1);

    auto add_file   = [&](CLI::App* s) { s->add_option("file", c.input_path, "Program file (.lp)")->required(); };
    auto add_format = [&](CLI::App* s, std::vector<std::string> formats) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    };
    auto add_cap = [&](CLI::App* s) { s->add_option("--cap", c.cap, "Signature size cap")->check(CLI::PositiveNumber); };
    auto add_model = [&](CLI::App* s) { s->add_option("--model", c.model, "Comma separated atoms (\"\" for the empty set)"); };
    auto add_limit = [&](CLI::App* s) { s->add_option("--limit", c.limit, "Maximum number of explanations")->check(CLI::PositiveNumber); };

    for (const char* name : {"models", "stable", "supported", "justified"}) {
        CLI::App* s = app.add_subcommand(name, std::string("List ") + name + (std::string(name) == "models" ? "" : " models"));
        add_file(s);
        add_format(s, {"text", "json", "dot"});
        add_cap(s);
    }
    CLI::App* explain = app.add_subcommand("explain", "Enumerate the explanations of a model");
    add_file(explain);
    add_model(explain);
    add_format(explain, {"text", "json", "dot"});
    add_limit(explain);

    CLI::App* prove = app.add_subcommand("prove", "Print the proof of an atom under each explanation");
    add_file(prove);
    add_model(prove);
    add_format(prove, {"text", "json"});
    add_limit(prove);
    prove->add_option("--atom", c.atom, "Atom to prove");

    CLI::App* encode = app.add_subcommand("encode", "Emit the explanation encoding for a stable model");
    add_file(encode);
    add_model(encode);
    encode->add_option("--out", c.out_path, "Output file");
    encode->add_flag("--ground", c.ground, "Emit the ground encoding instead");
    encode->add_flag("--force", c.force, "Accept any classical model");

    CLI::App* verify = app.add_subcommand("verify", "Check the semantic properties and the encoding bijection");
    add_file(verify);
    add_format(verify, {"text", "json"});
    add_cap(verify);

    CLI::App* fuzz = app.add_subcommand("fuzz", "Run the property checks over random programs");
    fuzz->add_option("--seed", c.seed, "Seed");
    fuzz->add_option("--cases", c.cases, "Number of programs");
    fuzz->add_option("--out", c.out_path, "Directory for counterexamples");
    add_cap(fuzz);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        err << "sgx: " << e.what() << '\n';
        return kParseError;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(c, out, err);
    }
    catch (const Exit& e) {
        err << "sgx: " << e.message << '\n';
        return e.code;
    }
    catch (const SignatureTooLarge& e) {
        err << "sgx: " << e.what() << '\n';
        return kCapExceeded;
    }
    catch (const NotAModel& e) {
        err << "sgx: " << e.what() << '\n';
        return kNotAModel;
    }
    catch (const AtomNotInModel& e) {
        err << "sgx: " << e.what() << '\n';
        return kAtomMissing;
    }
    catch (const NotStable& e) {
        err << "sgx: " << e.what() << '\n';
        return kNotStable;
    }
    catch (const Error& e) {
        err << "sgx: " << e.what() << '\n';
        return kParseError;
    }
}

} // namespace sgx::cli
