// Proof trees induced by an explanation.
#pragma once

#include <sgx/core.hpp>

#include <string>

namespace sgx {

//! Derivation of `atom`: its label, then one subproof per positive body atom of the
//! labelling rule, in body order. Subproofs are copied at every occurrence.
//! Throws AtomNotInModel.
ProofTree build_proof(const Program& program, const Explanation& explanation, const Atom& atom);

enum class ProofFormat { Ascii, Json };

//! Ascii: one "atom  (label)" line per node, premises indented two spaces below their
//! conclusion, and "⊤" beneath nodes without premises.
//! Json: {"atom": ..., "label": ..., "premises": [...]}.
std::string render_proof(const ProofTree& tree, ProofFormat format);

//! Number of nodes, not counting the ⊤ leaves.
std::size_t proof_size(const ProofTree& tree);

} // namespace sgx
