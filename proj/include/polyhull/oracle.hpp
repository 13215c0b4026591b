#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "polyhull/model.hpp"

namespace polyhull {

/// Per-dimension grid lo, lo + step, ..., up to hi.
struct GridSpec {
  Rational lo;
  Rational hi;
  Rational step = Rational(1);
};

/// Every point of the product grid in lexicographic order (last coordinate
/// varies fastest). Throws std::invalid_argument for lo > hi or step <= 0.
std::vector<RationalPoint> grid_points(const GridSpec& grid, std::size_t dims);

/// The two simplices whose hull is the n-dimensional cross polytope:
///   P1 = { -x1 - ... - xn <= 1, xj <= 0 },  P2 = { x1 + ... + xn <= 1, -xj <= 0 }
/// over variables x1..xn. Throws std::invalid_argument for n = 0.
std::pair<Polyhedron, Polyhedron> cross_polytope_pair(std::size_t n);

/// Reference hull for bounded 2D operands by vertex enumeration and gift
/// wrapping, independent of elimination. Degenerate hulls come back as the
/// affine hull's equalities plus segment bounds.
///
/// Throws DimensionError unless both operands are 2D, EmptyOperand for an
/// unsatisfiable operand and UnboundedOperand for an unbounded one.
Polyhedron hull_2d_vertex_oracle(const Polyhedron& p1, const Polyhedron& p2);

/// Vertices of a bounded, nonempty 2D polyhedron, deduplicated and sorted.
std::vector<RationalPoint> vertices_2d(const Polyhedron& poly);

/// Deterministic satisfiable system with m rows, coefficients in [-5, 5]
/// and right-hand sides in [-10, 10]; roughly one row in six is an
/// equality. With `bounded`, the box -10 <= xi <= 10 is appended. Variables
/// are x1..xn. Throws GenerationFailure after 1000 rejected draws.
Polyhedron random_polyhedron(std::size_t n, std::size_t m, std::uint64_t seed,
                             bool bounded);

/// Variable order x1..xn.
VarOrder default_vars(std::size_t n);

/// True iff the objective is bounded in both directions along every axis.
bool is_bounded(const Polyhedron& poly);

}  // namespace polyhull
