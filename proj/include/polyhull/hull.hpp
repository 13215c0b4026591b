#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyhull/model.hpp"
#include "polyhull/projection.hpp"

namespace polyhull {

/// Dimension layout of the lifted system: [z (n) | y1 (n) | y2 (n) | s1 | s2],
/// where z is the hull point, y1/y2 the scaled operand points and s1/s2 the
/// convex weights.
struct RelaxationLayout {
  std::size_t n = 0;

  std::size_t z(std::size_t i) const { return i; }
  std::size_t y1(std::size_t i) const { return n + i; }
  std::size_t y2(std::size_t i) const { return 2 * n + i; }
  std::size_t sigma1() const { return 3 * n; }
  std::size_t sigma2() const { return 3 * n + 1; }
  std::size_t total() const { return 3 * n + 2; }
};

/// The linear system whose projection onto z is the closed convex hull:
///   A1 y1 <= s1 B1,  A2 y2 <= s2 B2,  z = y1 + y2,  s1 + s2 = 1,
/// plus s1 >= 0 and s2 >= 0 when `include_sigma_bounds` is set.
struct RelaxationSystem {
  RelaxationLayout layout;
  ConstraintSystem system;
  bool include_sigma_bounds = true;
};

/// Homogenizes each row `a.x REL b` into `a.y - b*s REL 0` inside a
/// `target_dim`-dimensional space: dimension i of `system` becomes
/// embed[i] and the constant moves onto `sigma_dim`. Variable coefficients
/// are untouched. Throws DimensionError on an invalid embedding.
std::vector<LinearConstraint> scale_system(const ConstraintSystem& system,
                                           std::size_t sigma_dim,
                                           std::span<const std::size_t> embed,
                                           std::size_t target_dim);

/// Throws DimensionError, or EmptyOperand if either operand is Empty.
RelaxationSystem build_relaxation(const Polyhedron& p1, const Polyhedron& p2,
                                  bool include_sigma_bounds);

/// Projects a relaxation onto its z block and labels it with `vars`.
Polyhedron project_relaxation(const RelaxationSystem& relaxation,
                              const VarOrder& vars,
                              ProjectionOptions options = {});

/// Closure of the convex hull of p1 ∪ p2, labeled with p1's variables.
///
/// Operands are matched positionally, so shared names are harmless. An
/// unsatisfiable operand acts as the identity: hull(Empty, P) is P. Throws
/// DimensionError.
Polyhedron convex_hull_closure(const Polyhedron& p1, const Polyhedron& p2,
                               ProjectionOptions options = {});

/// Left fold of convex_hull_closure. Throws EmptyList or DimensionError.
Polyhedron hull_many(std::span<const Polyhedron> polys,
                     ProjectionOptions options = {});

/// The recession cone {d | A d <= 0}: every row with its right-hand side set
/// to zero. Throws EmptyOperand for an unsatisfiable polyhedron.
Polyhedron recession_cone(const Polyhedron& poly);

}  // namespace polyhull
