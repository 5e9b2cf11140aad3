#include <sgx/proof.hpp>

#include <json.hpp>

namespace sgx {

namespace {
ProofTree build_proof_unchecked(const Program& program, const Explanation& explanation, const Atom& atom) {
    const Label& label = explanation.label_of(atom);
    const Rule*  rule  = program.find(label);
    if (rule == nullptr) {
        throw UnknownLabel(label.id());
    }
    ProofTree tree{atom, label, {}};
    // Terminates: the explanation is acyclic, so the recursion follows a DAG.
    for (const Atom& q : rule->pos_body()) {
        tree.premises.push_back(build_proof_unchecked(program, explanation, q));
    }
    return tree;
}

void ascii(const ProofTree& t, std::size_t depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += t.atom.name() + "  (" + t.label.id() + ")\n";
    if (t.premises.empty()) {
        out.append(2 * (depth + 1), ' ');
        out += "⊤\n";
    }
    for (const ProofTree& p : t.premises) {
        ascii(p, depth + 1, out);
    }
}

nlohmann::ordered_json to_json(const ProofTree& t) {
    nlohmann::ordered_json j;
    j["atom"]     = t.atom.name();
    j["label"]    = t.label.id();
    j["premises"] = nlohmann::ordered_json::array();
    for (const ProofTree& p : t.premises) {
        j["premises"].push_back(to_json(p));
    }
    return j;
}
} // namespace

ProofTree build_proof(const Program& program, const Explanation& explanation, const Atom& atom) {
    if (explanation.kind() != GraphKind::Explanation && !is_acyclic(explanation.model(), explanation.edges())) {
        throw Error("proofs are only defined for acyclic support graphs");
    }
    return build_proof_unchecked(program, explanation, atom);
}

std::string render_proof(const ProofTree& tree, ProofFormat format) {
    if (format == ProofFormat::Json) {
        return to_json(tree).dump();
    }
    std::string out;
    ascii(tree, 0, out);
    return out;
}

std::size_t proof_size(const ProofTree& tree) {
    std::size_t n = 1;
    for (const ProofTree& p : tree.premises) {
        n += proof_size(p);
    }
    return n;
}

} // namespace sgx
