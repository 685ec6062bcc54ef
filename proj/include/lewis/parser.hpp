// Concrete syntax:
//
//   atoms     [a-z][a-zA-Z0-9_]*          F = bottom, T = top
//   prefix    ~a  (a -> F)    [] a  (T => a)    [.] a  (a & (T => a))
//   binary    &  binds tighter than  |  tighter than  ->  (right-assoc)
//             tighter than  =>  (non-associative)  tighter than  <-> / <=>
//   <-> and <=> both parse as intuitionistic bi-implication and expand to a
//   conjunction of two ->; there is no iff node in the AST.
//
// parse_template additionally accepts metavariable atoms %phi, %psi, ...
#pragma once

#include <stdexcept>
#include <string>

#include "lewis/formula.hpp"

namespace lewis {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

Fml parse(const std::string& text);
Fml parse_template(const std::string& text);

}  // namespace lewis
