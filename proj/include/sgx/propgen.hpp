// Seeded random programs and the brute-force property oracle run over them.
#pragma once

#include <sgx/core.hpp>
#include <sgx/semantics.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sgx {

struct GenConfig {
    std::uint64_t seed          = 0;
    std::size_t   n_atoms       = 5; // at most 8
    std::size_t   n_rules       = 7; // at most 12
    std::size_t   max_head      = 2;
    std::size_t   max_body      = 3;
    double        p_neg         = 0.3;
    double        p_dneg        = 0.1;
    double        p_constraint  = 0.1;

    //! Throws std::invalid_argument when a bound or probability is out of range.
    void validate() const;
};

//! Labels r1..rN over atoms a1..aM; identical configs give identical programs.
Program random_program(const GenConfig& config);

//! Config for case `index` of a fuzz run: cycles through Horn, normal and
//! disjunctive shapes so every property gets exercised.
GenConfig fuzz_config(std::uint64_t seed, std::size_t index);

struct Violation {
    std::string                   property;
    std::optional<Interpretation> model;
    std::string                   detail;
};

struct OracleReport {
    std::vector<Interpretation> models;
    std::vector<Interpretation> stable;
    std::vector<Interpretation> justified;
    std::vector<Interpretation> supported;
    std::vector<Violation>      violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

//! Computes the four model classes by brute force and checks the inclusions and
//! equalities relating them:
//!   - stable within justified within supported;
//!   - non-disjunctive: stable == justified, and supported == T_P fixpoints that are models;
//!   - consistent Horn: exactly one justified model, the least model;
//!   - every model: same explanations under the program and under its reduct, and the
//!     same support labels for each true atom.
//! Throws SignatureTooLarge.
OracleReport oracle_check(const Program& program, std::size_t cap = kDefaultSignatureCap);

//! Greedily drops rules while `fails` still holds; returns a program for which it holds.
Program shrink_program(const Program& program, const std::function<bool(const Program&)>& fails);

} // namespace sgx
