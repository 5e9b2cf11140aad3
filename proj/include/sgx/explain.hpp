// Support graphs and explanations of a model: validation, exhaustive
// enumeration, existence checks, and the constructive explanation of a
// stable model.
#pragma once

#include <sgx/core.hpp>
#include <sgx/semantics.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sgx {

//! Checks that the labelling is injective and that each atom's label names a rule
//! supporting it whose positive body is exactly the atom's set of in-neighbours.
//! GraphKind::Explanation additionally requires the graph to be acyclic.
//! Throws NotAModel if `interp` is not a model of `program`, ModelMismatch if the
//! candidate's vertex set differs from `interp`.
bool validate_explanation(const Program& program, const Interpretation& interp, const GraphRecord& candidate,
                          GraphKind kind = GraphKind::Explanation);

inline bool validate_explanation(const Program& program, const Interpretation& interp, const Explanation& candidate,
                                 GraphKind kind = GraphKind::Explanation) {
    return validate_explanation(program, interp, to_record(candidate), kind);
}

//! All explanations of `interp`, ordered lexicographically by the label of each atom
//! (atoms taken in name order, labels compared by id). Throws NotAModel.
std::vector<Explanation> enumerate_explanations(const Program& program, const Interpretation& interp,
                                                std::optional<std::size_t> limit = std::nullopt);

//! As enumerate_explanations, without the acyclicity requirement.
std::vector<Explanation> enumerate_support_graphs(const Program& program, const Interpretation& interp,
                                                  std::optional<std::size_t> limit = std::nullopt);

//! Number of explanations, without materializing them.
std::size_t count_explanations(const Program& program, const Interpretation& interp);

//! Existence checks; false for interpretations that are not models.
bool is_justified(const Program& program, const Interpretation& interp);
bool is_supported(const Program& program, const Interpretation& interp);

//! Resolves the two nondeterministic picks of the constructive algorithm.
struct Chooser {
    //! Index into `candidates` (reduct rules with true body and false head).
    std::function<std::size_t(std::span<const Rule* const> candidates)> pick_rule;
    //! Index into `atoms` (head atoms of the chosen rule that are in the model).
    std::function<std::size_t(const Rule& rule, std::span<const Atom> atoms)> pick_atom;
};

//! Smallest label id first, then smallest atom name.
Chooser lexicographic_chooser();

//! Builds an explanation of a stable model by repeatedly firing a reduct rule whose
//! body holds and head does not in the partial model. Throws NotStable.
Explanation construct_stable_explanation(const Program& program, const Interpretation& interp,
                                         const Chooser& chooser = lexicographic_chooser());

enum class ModelClass { Stable, Justified, Supported, Other };
const char* to_string(ModelClass c);

struct ModelEntry {
    Interpretation model;
    bool           stable       = false;
    bool           justified    = false;
    bool           supported    = false;
    std::size_t    explanations = 0;
    //! The strongest class the model belongs to.
    [[nodiscard]] ModelClass category() const;
};

struct ModelReport {
    std::vector<ModelEntry> models; // canonical order

    [[nodiscard]] std::vector<Interpretation> of_class(bool ModelEntry::*flag) const;
    [[nodiscard]] std::vector<Interpretation> stable() const { return of_class(&ModelEntry::stable); }
    [[nodiscard]] std::vector<Interpretation> justified() const { return of_class(&ModelEntry::justified); }
    [[nodiscard]] std::vector<Interpretation> supported() const { return of_class(&ModelEntry::supported); }
    [[nodiscard]] const ModelEntry*           find(const Interpretation& model) const;
};

//! Classifies every classical model. Throws SignatureTooLarge.
ModelReport classify_models(const Program& program, std::size_t cap = kDefaultSignatureCap);

} // namespace sgx
