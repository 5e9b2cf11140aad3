#include <sgx/core.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace sgx {

bool is_token(std::string_view text) noexcept {
    if (text.empty() || !std::islower(static_cast<unsigned char>(text.front())) || text == "not") {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!is_token(name_)) {
        throw InvalidToken(name_);
    }
}

Label::Label(std::string id) : id_(std::move(id)) {
    if (!is_token(id_)) {
        throw InvalidToken(id_);
    }
}

namespace {
void check_field(const Label& label, const AtomList& field) {
    for (size_t i = 0; i < field.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (field[i] == field[j]) {
                throw DuplicateAtomInField(label.id(), field[i].name());
            }
        }
    }
}
} // namespace

Rule::Rule(Label label, AtomList head, AtomList pos_body, AtomList neg_body, AtomList dneg_body)
    : label_(std::move(label))
    , head_(std::move(head))
    , pos_(std::move(pos_body))
    , neg_(std::move(neg_body))
    , dneg_(std::move(dneg_body)) {
    for (const auto* field : {&head_, &pos_, &neg_, &dneg_}) {
        check_field(label_, *field);
    }
}

bool Rule::has_in_head(const Atom& a) const noexcept {
    return std::find(head_.begin(), head_.end(), a) != head_.end();
}

Program validate_program(std::vector<Rule> rules) {
    Program p;
    for (size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = rules[i];
        if (!p.by_label_.emplace(r.label().id(), i).second) {
            throw DuplicateLabel(r.label().id());
        }
        for (const auto* field : {&r.head(), &r.pos_body(), &r.neg_body(), &r.dneg_body()}) {
            for (const Atom& a : *field) {
                if (p.by_atom_.emplace(a.name(), p.signature_.size()).second) {
                    p.signature_.push_back(a);
                }
            }
        }
        p.flags_.positive        = p.flags_.positive && r.is_positive();
        p.flags_.non_disjunctive = p.flags_.non_disjunctive && !r.is_disjunctive();
    }
    p.flags_.horn = p.flags_.positive && p.flags_.non_disjunctive;
    p.rules_      = std::move(rules);
    return p;
}

const Rule* Program::find(const Label& label) const {
    auto it = by_label_.find(label.id());
    return it != by_label_.end() ? &rules_[it->second] : nullptr;
}

std::optional<size_t> Program::atom_index(const Atom& atom) const {
    auto it = by_atom_.find(atom.name());
    if (it == by_atom_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Program::has_constraints() const noexcept {
    return std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_constraint(); });
}

Interpretation Interpretation::of(std::initializer_list<std::string_view> names) {
    Interpretation res;
    for (auto n : names) {
        res.insert(Atom(std::string(n)));
    }
    return res;
}

bool Interpretation::is_subset_of(const Interpretation& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

std::string Interpretation::to_string() const {
    if (atoms_.empty()) {
        return "∅";
    }
    std::string out;
    for (const Atom& a : atoms_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += a.name();
    }
    return out;
}

bool canonical_less(const Interpretation& lhs, const Interpretation& rhs) {
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

void sort_canonical(std::vector<Interpretation>& models) {
    std::sort(models.begin(), models.end(), canonical_less);
}

EdgeSet induced_edges(const Program& program, const Labelling& labelling) {
    EdgeSet edges;
    for (const auto& [atom, label] : labelling) {
        const Rule* r = program.find(label);
        if (r == nullptr) {
            throw UnknownLabel(label.id());
        }
        for (const Atom& q : r->pos_body()) {
            edges.emplace(q, atom);
        }
    }
    return edges;
}

bool is_acyclic(const Interpretation& vertices, const EdgeSet& edges) {
    // Kahn's algorithm; edges leaving the vertex set are ignored.
    std::map<Atom, size_t>            indegree;
    std::map<Atom, std::vector<Atom>> succ;
    for (const Atom& v : vertices) {
        indegree[v] = 0;
    }
    for (const auto& [from, to] : edges) {
        if (!vertices.contains(from) || !vertices.contains(to)) {
            continue;
        }
        succ[from].push_back(to);
        ++indegree[to];
    }
    std::vector<Atom> ready;
    for (const auto& [v, d] : indegree) {
        if (d == 0) {
            ready.push_back(v);
        }
    }
    size_t seen = 0;
    while (!ready.empty()) {
        Atom v = ready.back();
        ready.pop_back();
        ++seen;
        for (const Atom& w : succ[v]) {
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return seen == vertices.size();
}

Explanation::Explanation(const Program& program, Labelling labelling, GraphKind kind)
    : labelling_(std::move(labelling)), kind_(kind) {
    for (const auto& entry : labelling_) {
        model_.insert(entry.first);
    }
    edges_ = induced_edges(program, labelling_);
}

const Label& Explanation::label_of(const Atom& a) const {
    auto it = labelling_.find(a);
    if (it == labelling_.end()) {
        throw AtomNotInModel(a.name());
    }
    return it->second;
}

} // namespace sgx
