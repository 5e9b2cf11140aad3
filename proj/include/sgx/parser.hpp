// Text format for labelled programs.
//
//   % comment
//   l1: a ; b.                 disjunctive fact ('|' is accepted for ';')
//   l2: d :- a, not c.         negated literal
//   l3: p :- q, not not p.     doubly negated literal
//   l4: {p} :- q.              singleton choice, read as  l4: p :- q, not not p.
//   c1: #false :- a, b.        constraint (also written ':- a, b.')
//   a :- b.                    unlabelled; receives the label r_<line>
#pragma once

#include <sgx/core.hpp>

#include <string>
#include <string_view>

namespace sgx {

//! Parses a whole program. Throws SyntaxError, DuplicateLabel, DuplicateAtomInField.
Program parse_program(std::string_view text);

//! Parses a single statement (without the program-level label checks).
Rule parse_rule(std::string_view statement);

//! Expands the choice abbreviation  l: {p} :- B  into  l: p :- B, not not p.
Rule expand_choice(Label label, const Atom& choice, AtomList pos_body, AtomList neg_body, AtomList dneg_body);

//! Canonical text; parse_program(render_program(p)) == p.
std::string render_program(const Program& program);
std::string render_rule(const Rule& rule);

} // namespace sgx
