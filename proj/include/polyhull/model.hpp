#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polyhull/rational.hpp"

namespace polyhull {

/// Ordered list of distinct variable names. The position of a name is the
/// dimension it denotes; names only matter at the I/O boundary.
class VarOrder {
 public:
  VarOrder() = default;

  /// Throws DuplicateVariable if a name repeats.
  explicit VarOrder(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarOrder&, const VarOrder&) = default;

 private:
  std::vector<std::string> names_;
};

/// A point of Q^n.
struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& s, const RationalPoint& p);

enum class Relation { LessEqual, Equal };

/// Relation as written by a user; GreaterEqual never survives normalization.
enum class RawRelation { LessEqual, Equal, GreaterEqual };

/// A flattened constraint `coeffs . x REL rhs` before canonicalization.
struct RawConstraint {
  std::vector<Rational> coeffs;
  RawRelation relation = RawRelation::LessEqual;
  Rational rhs;
};

class LinearConstraint;
struct TriviallyTrue {};
struct TriviallyFalse {};
using NormalizeResult =
    std::variant<LinearConstraint, TriviallyTrue, TriviallyFalse>;

/// Canonical constraint `coeffs . x <= rhs` or `coeffs . x = rhs`.
///
/// Coefficients and right-hand side are integers whose overall gcd is 1, at
/// least one coefficient is nonzero, and an equality has a positive leading
/// coefficient. Instances only come out of normalize().
class LinearConstraint {
 public:
  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t i) const { return coeffs_[i]; }
  Relation relation() const { return relation_; }
  bool is_equality() const { return relation_ == Relation::Equal; }
  const Integer& rhs() const { return rhs_; }

  std::size_t nonzero_count() const;

  /// The constraint as an inequality with both sides negated. For an
  /// equality this is the `>=` half.
  LinearConstraint negated_inequality() const;

  /// Same row with LessEqual relation (the `<=` half of an equality).
  LinearConstraint as_inequality() const;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;

 private:
  LinearConstraint(std::vector<Integer> coeffs, Relation relation,
                   Integer rhs)
      : coeffs_(std::move(coeffs)), relation_(relation), rhs_(std::move(rhs)) {}

  friend NormalizeResult normalize(std::vector<Integer> coeffs,
                                   Relation relation, Integer rhs);

  std::vector<Integer> coeffs_;
  Relation relation_;
  Integer rhs_;
};

/// Canonicalizes a raw constraint: scales to coprime integers, flips `>=`
/// into `<=`, and resolves all-zero rows.
NormalizeResult normalize(const RawConstraint& raw);

/// Integer fast path used by elimination; same semantics as above.
NormalizeResult normalize(std::vector<Integer> coeffs, Relation relation,
                          Integer rhs);

/// Normalizes and expects a proper constraint; throws std::invalid_argument
/// when the row is trivially true or false.
LinearConstraint make_constraint(const RawConstraint& raw);

/// The human-facing orientation of a constraint: an inequality whose leading
/// coefficient is negative is shown negated as `>=`.
struct Presentation {
  std::vector<Integer> coeffs;
  RawRelation relation;
  Integer rhs;
};

Presentation present(const LinearConstraint& c);

/// Total order used for sorted output: leading variable first, then
/// coefficients by magnitude (positive before negative), then `=`, `<=`,
/// `>=`, then right-hand side.
bool canonical_less(const LinearConstraint& a, const LinearConstraint& b);

void sort_canonical(std::vector<LinearConstraint>& constraints);

/// Conjunction of constraints over `dim` dimensions, or the distinguished
/// unsatisfiable value Empty. Constraint order carries no meaning.
class ConstraintSystem {
 public:
  /// The whole space Q^dim.
  explicit ConstraintSystem(std::size_t dim) : dim_(dim) {}

  /// Throws DimensionError if a constraint has the wrong length.
  ConstraintSystem(std::size_t dim, std::vector<LinearConstraint> constraints);

  static ConstraintSystem empty(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  std::size_t size() const { return constraints_.size(); }
  std::span<const LinearConstraint> constraints() const {
    return constraints_;
  }
  auto begin() const { return constraints_.begin(); }
  auto end() const { return constraints_.end(); }

  void add(const LinearConstraint& c);
  /// Drops TriviallyTrue; TriviallyFalse turns the system into Empty.
  void add(const NormalizeResult& c);
  void add(const RawConstraint& c) { add(normalize(c)); }

  friend bool operator==(const ConstraintSystem&,
                         const ConstraintSystem&) = default;

 private:
  std::size_t dim_ = 0;
  bool empty_ = false;
  std::vector<LinearConstraint> constraints_;
};

/// A closed convex polyhedron: constraints interpreted over an ordered list
/// of variables.
class Polyhedron {
 public:
  /// Throws DimensionError unless vars and system agree.
  Polyhedron(VarOrder vars, ConstraintSystem system);

  static Polyhedron empty(VarOrder vars);
  static Polyhedron universe(VarOrder vars);

  const VarOrder& vars() const { return vars_; }
  const ConstraintSystem& system() const { return system_; }
  std::size_t dim() const { return vars_.dim(); }
  bool is_empty() const { return system_.is_empty(); }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  VarOrder vars_;
  ConstraintSystem system_;
};

/// Exact evaluation of coeffs . p.
Rational evaluate(std::span<const Integer> coeffs, const RationalPoint& p);

bool satisfies(const RationalPoint& p, const LinearConstraint& c);
bool satisfies(const RationalPoint& p, const RawConstraint& c);
bool satisfies(const RationalPoint& p, const ConstraintSystem& s);

/// Membership test; Empty contains nothing. Throws DimensionError.
bool satisfies(const RationalPoint& p, const Polyhedron& poly);

/// Relabels the variables positionally. Throws DimensionError.
Polyhedron rename(const Polyhedron& poly, VarOrder fresh);

}  // namespace polyhull
