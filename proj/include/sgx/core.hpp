// Domain types shared by every sgx module: atoms, labels, labelled rules,
// programs, interpretations and support graphs.
#pragma once

#include <sgx/error.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sgx {

//! True if `text` is a token: a lowercase letter followed by letters, digits or '_'.
//! The keyword `not` is reserved and never a token.
bool is_token(std::string_view text) noexcept;

//! A propositional atom.
class Atom {
public:
    explicit Atom(std::string name);
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom& lhs, const Atom& rhs) noexcept { return lhs.name_ <=> rhs.name_; }

private:
    std::string name_;
};

//! A rule label. Labels live in their own namespace: label `l1` and atom `l1` may coexist.
class Label {
public:
    explicit Label(std::string id);
    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& lhs, const Label& rhs) noexcept { return lhs.id_ <=> rhs.id_; }

private:
    std::string id_;
};

using AtomList = std::vector<Atom>;

//! A labelled rule  l : h1 v ... v hm <- q1, ..., qn, not s1, ..., not sj, not not t1, ..., not not tk.
//!
//! Each field is an ordered set: insertion order is kept and duplicates are rejected
//! with DuplicateAtomInField. An empty head makes the rule a constraint.
class Rule {
public:
    Rule(Label label, AtomList head, AtomList pos_body = {}, AtomList neg_body = {}, AtomList dneg_body = {});

    [[nodiscard]] const Label&    label() const noexcept { return label_; }
    [[nodiscard]] const AtomList& head() const noexcept { return head_; }
    [[nodiscard]] const AtomList& pos_body() const noexcept { return pos_; }
    [[nodiscard]] const AtomList& neg_body() const noexcept { return neg_; }
    [[nodiscard]] const AtomList& dneg_body() const noexcept { return dneg_; }

    [[nodiscard]] bool is_constraint() const noexcept { return head_.empty(); }
    [[nodiscard]] bool is_disjunctive() const noexcept { return head_.size() >= 2; }
    [[nodiscard]] bool is_fact() const noexcept {
        return head_.size() == 1 && pos_.empty() && neg_.empty() && dneg_.empty();
    }
    //! True if the negative part of the body is empty.
    [[nodiscard]] bool is_positive() const noexcept { return neg_.empty() && dneg_.empty(); }
    [[nodiscard]] bool has_in_head(const Atom& a) const noexcept;

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    Label    label_;
    AtomList head_;
    AtomList pos_;
    AtomList neg_;
    AtomList dneg_;
};

struct Classification {
    bool positive        = true;
    bool non_disjunctive = true;
    bool horn            = true;
    friend bool operator==(const Classification&, const Classification&) = default;
};

//! A finite set of rules with pairwise distinct labels.
//!
//! The signature lists every atom occurring in some rule, in order of first occurrence.
class Program {
public:
    Program() = default;

    [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
    [[nodiscard]] const AtomList&          signature() const noexcept { return signature_; }
    [[nodiscard]] bool                     empty() const noexcept { return rules_.empty(); }

    //! Rule carrying `label`, or nullptr.
    [[nodiscard]] const Rule*           find(const Label& label) const;
    [[nodiscard]] std::optional<size_t> atom_index(const Atom& atom) const;
    [[nodiscard]] bool                  in_signature(const Atom& atom) const { return atom_index(atom).has_value(); }

    [[nodiscard]] Classification classify() const noexcept { return flags_; }
    [[nodiscard]] bool           is_positive() const noexcept { return flags_.positive; }
    [[nodiscard]] bool           is_non_disjunctive() const noexcept { return flags_.non_disjunctive; }
    [[nodiscard]] bool           is_horn() const noexcept { return flags_.horn; }
    [[nodiscard]] bool           has_constraints() const noexcept;

    friend bool operator==(const Program& lhs, const Program& rhs) { return lhs.rules_ == rhs.rules_; }

private:
    friend Program validate_program(std::vector<Rule> rules);

    std::vector<Rule>                       rules_;
    AtomList                                signature_;
    std::unordered_map<std::string, size_t> by_label_;
    std::unordered_map<std::string, size_t> by_atom_;
    Classification                          flags_;
};

//! Builds a Program, computing its signature. Throws DuplicateLabel.
Program validate_program(std::vector<Rule> rules);

//! Positive / non-disjunctive / Horn flags of `program`.
inline Classification classify(const Program& program) noexcept { return program.classify(); }

//! A set of true atoms, iterated in name order.
class Interpretation {
public:
    using const_iterator = std::set<Atom>::const_iterator;

    Interpretation() = default;
    Interpretation(std::initializer_list<Atom> atoms) : atoms_(atoms) {}
    explicit Interpretation(std::set<Atom> atoms) : atoms_(std::move(atoms)) {}
    template <typename It>
    Interpretation(It first, It last) : atoms_(first, last) {}

    //! Parses names; throws InvalidToken on a malformed name.
    static Interpretation of(std::initializer_list<std::string_view> names);

    [[nodiscard]] bool   contains(const Atom& a) const { return atoms_.contains(a); }
    [[nodiscard]] size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] bool   empty() const noexcept { return atoms_.empty(); }
    [[nodiscard]] const std::set<Atom>& atoms() const noexcept { return atoms_; }
    const_iterator begin() const noexcept { return atoms_.begin(); }
    const_iterator end() const noexcept { return atoms_.end(); }

    bool insert(const Atom& a) { return atoms_.insert(a).second; }
    bool erase(const Atom& a) { return atoms_.erase(a) != 0; }

    [[nodiscard]] bool is_subset_of(const Interpretation& other) const;
    //! Space separated names, "∅" when empty.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
    std::set<Atom> atoms_;
};

//! Canonical model order: by cardinality, then lexicographically by atom names.
bool canonical_less(const Interpretation& lhs, const Interpretation& rhs);
void sort_canonical(std::vector<Interpretation>& models);

using Labelling = std::map<Atom, Label>;
using Edge      = std::pair<Atom, Atom>; // (source, target)
using EdgeSet   = std::set<Edge>;

//! Which contract a graph record was validated against.
enum class GraphKind {
    SupportGraph, //!< conditions (i) and (ii) only
    Explanation,  //!< additionally acyclic
};

//! Edges determined by a labelling: (q, p) for every q in the positive body of the
//! rule labelling p. Throws UnknownLabel if some label names no rule.
EdgeSet induced_edges(const Program& program, const Labelling& labelling);

//! True if the directed graph on `vertices` given by `edges` has no cycle.
bool is_acyclic(const Interpretation& vertices, const EdgeSet& edges);

//! A support graph <I, E, lambda>; when `kind` is Explanation the graph is also acyclic.
//!
//! The graph is fully determined by (program, labelling), so construction only takes
//! the labelling and derives the vertex and edge sets.
class Explanation {
public:
    Explanation(const Program& program, Labelling labelling, GraphKind kind = GraphKind::Explanation);

    [[nodiscard]] const Interpretation& model() const noexcept { return model_; }
    [[nodiscard]] const Labelling&      labelling() const noexcept { return labelling_; }
    [[nodiscard]] const EdgeSet&        edges() const noexcept { return edges_; }
    [[nodiscard]] GraphKind             kind() const noexcept { return kind_; }
    [[nodiscard]] const Label&          label_of(const Atom& a) const;

    friend bool operator==(const Explanation& lhs, const Explanation& rhs) {
        return lhs.labelling_ == rhs.labelling_ && lhs.edges_ == rhs.edges_;
    }

private:
    Interpretation model_;
    Labelling      labelling_;
    EdgeSet        edges_;
    GraphKind      kind_;
};

//! Raw record used by readers (JSON) before validation: any vertex/edge sets allowed.
struct GraphRecord {
    Interpretation model;
    Labelling      labelling;
    EdgeSet        edges;
};

inline GraphRecord to_record(const Explanation& e) { return {e.model(), e.labelling(), e.edges()}; }

//! The proof pi_G(p): conclusion atom, rule label, and one premise per positive body atom.
struct ProofTree {
    Atom                   atom;
    Label                  label;
    std::vector<ProofTree> premises;
    friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

} // namespace sgx
