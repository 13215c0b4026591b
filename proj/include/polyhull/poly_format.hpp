#pragma once

#include <string>
#include <string_view>

#include "polyhull/model.hpp"

namespace polyhull {

// Polyhedron text format:
//
//   # comment to end of line
//   vars x y z
//   y + z >= x
//   x >= y + 2*z
//   1/2*y <= 3
//
// The first non-comment line declares the variables in dimension order.
// Each following line is one constraint `expr REL expr` with REL one of
// `<=`, `=`, `>=` (`=<` and `==` are accepted as aliases). Expressions are
// sums and differences of numbers (`p` or `p/q`), variables and products in
// which at least one factor is constant; parentheses are allowed. The single
// word `false` denotes the empty polyhedron and `true` is ignored.

/// Throws SyntaxError (with line and column), StrictInequalityError,
/// UnknownVariable or DuplicateVariable.
Polyhedron parse_poly(std::string_view text);

/// Parses one constraint against an existing variable order.
RawConstraint parse_constraint(std::string_view text, const VarOrder& vars);

/// Canonical text: `vars` header, then one constraint per line in canonical
/// order with coprime integer coefficients; Empty prints as `false`.
std::string format_poly(const Polyhedron& poly);

/// A single constraint in presentation form, e.g. `x - 2*y >= -1`.
std::string format_constraint(const LinearConstraint& c, const VarOrder& vars);

}  // namespace polyhull
