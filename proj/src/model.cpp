#include "polyhull/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "polyhull/errors.hpp"

namespace polyhull {

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw DuplicateVariable(name);
  }
}

std::optional<std::size_t> VarOrder::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
  if (a.dim() != b.dim()) throw DimensionError("point dimensions differ");
  RationalPoint out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
  if (a.dim() != b.dim()) throw DimensionError("point dimensions differ");
  RationalPoint out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

RationalPoint operator*(const Rational& s, const RationalPoint& p) {
  RationalPoint out = p;
  for (auto& c : out.coords) c *= s;
  return out;
}

std::size_t LinearConstraint::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& a) { return a != 0; }));
}

LinearConstraint LinearConstraint::negated_inequality() const {
  std::vector<Integer> coeffs(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = -coeffs_[i];
  return LinearConstraint(std::move(coeffs), Relation::LessEqual,
                          Integer(-rhs_));
}

LinearConstraint LinearConstraint::as_inequality() const {
  return LinearConstraint(coeffs_, Relation::LessEqual, rhs_);
}

NormalizeResult normalize(std::vector<Integer> coeffs, Relation relation,
                          Integer rhs) {
  Integer g = 0;
  for (const auto& a : coeffs) g = gcd(g, a);
  if (g == 0) {
    bool holds = relation == Relation::Equal ? rhs == 0 : rhs >= 0;
    if (holds) return TriviallyTrue{};
    return TriviallyFalse{};
  }
  g = gcd(g, rhs);
  if (g != 1) {
    for (auto& a : coeffs) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
  }
  if (relation == Relation::Equal) {
    auto lead = std::find_if(coeffs.begin(), coeffs.end(),
                             [](const Integer& a) { return a != 0; });
    if (*lead < 0) {
      for (auto& a : coeffs) a = -a;
      rhs = -rhs;
    }
  }
  return LinearConstraint(std::move(coeffs), relation, std::move(rhs));
}

NormalizeResult normalize(const RawConstraint& raw) {
  Integer scale = 1;
  for (const auto& a : raw.coeffs) scale = lcm(scale, a.denominator());
  scale = lcm(scale, raw.rhs.denominator());

  // a >= b is -a <= -b.
  const bool flip = raw.relation == RawRelation::GreaterEqual;
  auto to_integer = [&](const Rational& v) {
    Integer out = v.numerator() * (scale / v.denominator());
    if (flip) out = -out;
    return out;
  };

  std::vector<Integer> coeffs;
  coeffs.reserve(raw.coeffs.size());
  for (const auto& a : raw.coeffs) coeffs.push_back(to_integer(a));
  Relation relation = raw.relation == RawRelation::Equal ? Relation::Equal
                                                         : Relation::LessEqual;
  return normalize(std::move(coeffs), relation, to_integer(raw.rhs));
}

LinearConstraint make_constraint(const RawConstraint& raw) {
  auto result = normalize(raw);
  if (auto* c = std::get_if<LinearConstraint>(&result)) return *c;
  throw std::invalid_argument("constraint has no nonzero coefficient");
}

Presentation present(const LinearConstraint& c) {
  Presentation out{c.coeffs(),
                   c.is_equality() ? RawRelation::Equal : RawRelation::LessEqual,
                   c.rhs()};
  if (c.is_equality()) return out;
  auto lead = std::find_if(out.coeffs.begin(), out.coeffs.end(),
                           [](const Integer& a) { return a != 0; });
  if (lead != out.coeffs.end() && *lead < 0) {
    for (auto& a : out.coeffs) a = -a;
    out.rhs = -out.rhs;
    out.relation = RawRelation::GreaterEqual;
  }
  return out;
}

namespace {

std::size_t leading_index(const std::vector<Integer>& coeffs) {
  auto it = std::find_if(coeffs.begin(), coeffs.end(),
                         [](const Integer& a) { return a != 0; });
  return static_cast<std::size_t>(it - coeffs.begin());
}

int relation_rank(RawRelation r) {
  switch (r) {
    case RawRelation::Equal:
      return 0;
    case RawRelation::LessEqual:
      return 1;
    case RawRelation::GreaterEqual:
      return 2;
  }
  return 3;
}

}  // namespace

bool canonical_less(const LinearConstraint& a, const LinearConstraint& b) {
  Presentation pa = present(a);
  Presentation pb = present(b);
  if (pa.coeffs.size() != pb.coeffs.size()) {
    return pa.coeffs.size() < pb.coeffs.size();
  }
  std::size_t la = leading_index(pa.coeffs);
  std::size_t lb = leading_index(pb.coeffs);
  if (la != lb) return la < lb;
  for (std::size_t i = 0; i < pa.coeffs.size(); ++i) {
    int c = mpz_cmpabs(pa.coeffs[i].get_mpz_t(), pb.coeffs[i].get_mpz_t());
    if (c != 0) return c < 0;
    int sa = sgn(pa.coeffs[i]);
    int sb = sgn(pb.coeffs[i]);
    if (sa != sb) return sa > sb;
  }
  int ra = relation_rank(pa.relation);
  int rb = relation_rank(pb.relation);
  if (ra != rb) return ra < rb;
  return pa.rhs < pb.rhs;
}

void sort_canonical(std::vector<LinearConstraint>& constraints) {
  std::sort(constraints.begin(), constraints.end(), canonical_less);
}

ConstraintSystem::ConstraintSystem(std::size_t dim,
                                   std::vector<LinearConstraint> constraints)
    : dim_(dim) {
  constraints_.reserve(constraints.size());
  for (auto& c : constraints) add(c);
}

ConstraintSystem ConstraintSystem::empty(std::size_t dim) {
  ConstraintSystem s(dim);
  s.empty_ = true;
  return s;
}

void ConstraintSystem::add(const LinearConstraint& c) {
  if (c.dim() != dim_) {
    throw DimensionError("constraint over " + std::to_string(c.dim()) +
                         " dimensions added to a system over " +
                         std::to_string(dim_));
  }
  if (empty_) return;
  constraints_.push_back(c);
}

void ConstraintSystem::add(const NormalizeResult& c) {
  if (auto* lc = std::get_if<LinearConstraint>(&c)) {
    add(*lc);
  } else if (std::holds_alternative<TriviallyFalse>(c)) {
    empty_ = true;
    constraints_.clear();
  }
}

Polyhedron::Polyhedron(VarOrder vars, ConstraintSystem system)
    : vars_(std::move(vars)), system_(std::move(system)) {
  if (vars_.dim() != system_.dim()) {
    throw DimensionError("polyhedron has " + std::to_string(vars_.dim()) +
                         " variables but a system over " +
                         std::to_string(system_.dim()) + " dimensions");
  }
}

Polyhedron Polyhedron::empty(VarOrder vars) {
  std::size_t n = vars.dim();
  return Polyhedron(std::move(vars), ConstraintSystem::empty(n));
}

Polyhedron Polyhedron::universe(VarOrder vars) {
  std::size_t n = vars.dim();
  return Polyhedron(std::move(vars), ConstraintSystem(n));
}

Rational evaluate(std::span<const Integer> coeffs, const RationalPoint& p) {
  if (coeffs.size() != p.dim()) {
    throw DimensionError("point has " + std::to_string(p.dim()) +
                         " coordinates, expected " +
                         std::to_string(coeffs.size()));
  }
  Rational sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) sum += Rational(coeffs[i]) * p[i];
  }
  return sum;
}

bool satisfies(const RationalPoint& p, const LinearConstraint& c) {
  Rational lhs = evaluate(c.coeffs(), p);
  Rational rhs(c.rhs());
  return c.is_equality() ? lhs == rhs : lhs <= rhs;
}

bool satisfies(const RationalPoint& p, const RawConstraint& c) {
  if (c.coeffs.size() != p.dim()) {
    throw DimensionError("point dimension does not match constraint");
  }
  Rational lhs;
  for (std::size_t i = 0; i < p.dim(); ++i) lhs += c.coeffs[i] * p[i];
  switch (c.relation) {
    case RawRelation::LessEqual:
      return lhs <= c.rhs;
    case RawRelation::Equal:
      return lhs == c.rhs;
    case RawRelation::GreaterEqual:
      return lhs >= c.rhs;
  }
  return false;
}

bool satisfies(const RationalPoint& p, const ConstraintSystem& s) {
  if (p.dim() != s.dim()) {
    throw DimensionError("point has " + std::to_string(p.dim()) +
                         " coordinates, system has " +
                         std::to_string(s.dim()) + " dimensions");
  }
  if (s.is_empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](const LinearConstraint& c) { return satisfies(p, c); });
}

bool satisfies(const RationalPoint& p, const Polyhedron& poly) {
  return satisfies(p, poly.system());
}

Polyhedron rename(const Polyhedron& poly, VarOrder fresh) {
  if (fresh.dim() != poly.dim()) {
    throw DimensionError("cannot rename " + std::to_string(poly.dim()) +
                         " variables to " + std::to_string(fresh.dim()));
  }
  return Polyhedron(std::move(fresh), poly.system());
}

}  // namespace polyhull
