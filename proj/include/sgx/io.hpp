// Text, JSON and DOT renderings shared by the command line tool.
#pragma once

#include <sgx/core.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sgx {

//! Comma separated atom names; the empty string is the empty interpretation.
//! Throws InvalidToken.
Interpretation parse_model(std::string_view text);

//! {"models":[["a","d"],...]}
std::string models_to_json(const std::vector<Interpretation>& models);

//! {"model":[...],"explanations":[{"labelling":{atom:label},"edges":[[q,p],...]}],"count":N}
std::string explanations_to_json(const Interpretation& model, const std::vector<Explanation>& explanations);

struct ExplanationDocument {
    Interpretation           model;
    std::vector<GraphRecord> explanations;
};

//! Reads explanations_to_json output back. Throws Error on malformed input.
ExplanationDocument explanations_from_json(std::string_view text);

//! One block per explanation: "label: atom" lines then "q -> p" edge lines.
std::string explanations_to_text(const std::vector<Explanation>& explanations);

//! One digraph per explanation; nodes are atoms displayed as "label: atom".
std::string explanations_to_dot(const std::vector<Explanation>& explanations);

} // namespace sgx
