#pragma once

#include <span>
#include <vector>

#include "polyhull/model.hpp"
#include "polyhull/rational.hpp"

namespace polyhull {

enum class Direction { Maximize, Minimize };

/// Result of an exact linear optimization.
class LpOutcome {
 public:
  enum class Status { Optimal, Unbounded, Infeasible };

  static LpOutcome optimal(Rational value, RationalPoint witness) {
    return LpOutcome(Status::Optimal, std::move(value), std::move(witness));
  }
  static LpOutcome unbounded() { return LpOutcome(Status::Unbounded, {}, {}); }
  static LpOutcome infeasible() {
    return LpOutcome(Status::Infeasible, {}, {});
  }

  Status status() const { return status_; }
  bool is_optimal() const { return status_ == Status::Optimal; }
  bool is_unbounded() const { return status_ == Status::Unbounded; }
  bool is_infeasible() const { return status_ == Status::Infeasible; }

  /// Only meaningful when optimal.
  const Rational& value() const { return value_; }
  const RationalPoint& witness() const { return witness_; }

 private:
  LpOutcome(Status status, Rational value, RationalPoint witness)
      : status_(status), value_(std::move(value)), witness_(std::move(witness)) {}

  Status status_;
  Rational value_;
  RationalPoint witness_;
};

/// Decides nonemptiness over Q^n with an exact phase-one simplex.
bool is_satisfiable(const ConstraintSystem& system);
bool is_satisfiable(const Polyhedron& poly);

/// Optimizes `objective . x` over the system. Uses Bland's rule, so it
/// terminates on degenerate input. Throws DimensionError.
LpOutcome optimize(const ConstraintSystem& system,
                   std::span<const Rational> objective, Direction direction);
LpOutcome optimize(const ConstraintSystem& system,
                   std::span<const Integer> objective, Direction direction);

/// True iff every point of the system satisfies `c`. Empty entails
/// everything. Throws DimensionError.
bool entails(const ConstraintSystem& system, const LinearConstraint& c);
bool entails(const Polyhedron& poly, const LinearConstraint& c);

/// inner ⊆ outer, compared positionally. Throws DimensionError.
bool is_subset(const ConstraintSystem& inner, const ConstraintSystem& outer);
bool is_subset(const Polyhedron& inner, const Polyhedron& outer);

/// Same denoted set, compared positionally (names are ignored). Throws
/// DimensionError.
bool set_equal(const ConstraintSystem& a, const ConstraintSystem& b);
bool set_equal(const Polyhedron& a, const Polyhedron& b);

/// Irredundant, canonically sorted equivalent of a satisfiable system.
///
/// Implicit equalities are detected and emitted as `=` rows (an independent
/// subset of them), then the remaining inequalities are removed greedily in
/// canonical order whenever the rest entails them. Throws UnsatisfiableInput.
ConstraintSystem minimize_system(const ConstraintSystem& system);

}  // namespace polyhull
