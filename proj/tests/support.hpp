#pragma once

// Shared helpers for the unit, property and acceptance tests. The brute-force
// routines here deliberately avoid the library's simplex and elimination code
// so they can serve as independent references.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyhull/model.hpp"
#include "polyhull/poly_format.hpp"

namespace polyhull::testing {

inline Polyhedron P(const std::string& text) { return parse_poly(text); }

inline LinearConstraint C(const std::string& text, const VarOrder& vars) {
  return make_constraint(parse_constraint(text, vars));
}

inline Rational Q(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline std::string data_path(const std::string& name) {
  return std::string(POLYHULL_TEST_DATA) + "/" + name;
}

std::string read_file(const std::string& path);

/// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(int one_in) { return integer(1, one_in) == 1; }

  /// p/q with |p| <= bound*q, q in [1, max_den].
  Rational rational(int bound, int max_den) {
    int q = integer(1, max_den);
    return Q(integer(-bound * q, bound * q), q);
  }

  RationalPoint point(std::size_t dim, int bound, int max_den) {
    RationalPoint p;
    for (std::size_t i = 0; i < dim; ++i) p.coords.push_back(rational(bound, max_den));
    return p;
  }

  /// Random nonzero integer row in [-k, k].
  std::vector<Rational> row(std::size_t dim, int k) {
    std::vector<Rational> a(dim);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& v : a) {
        v = integer(-k, k);
        nonzero = nonzero || !v.is_zero();
      }
    }
    return a;
  }

  /// A satisfiable system built around a random anchor point, so every draw
  /// is usable. Equalities appear with probability 1/eq_one_in.
  ConstraintSystem system_around(const RationalPoint& anchor, std::size_t rows,
                                 int eq_one_in);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Solves the square system M x = b exactly; nullopt if singular.
std::optional<RationalPoint> solve_square(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> b);

/// Every vertex of a bounded system, by trying each choice of `dim` tight
/// rows. Exponential and only for tiny instances.
std::vector<RationalPoint> brute_vertices(const ConstraintSystem& system);

/// max objective over a bounded nonempty system via brute_vertices.
std::optional<Rational> brute_max(const ConstraintSystem& system,
                                  const std::vector<Rational>& objective);

/// Does every point of the (bounded, nonempty) system satisfy c? Decided
/// through brute_max.
bool brute_entails(const ConstraintSystem& system, const LinearConstraint& c);

/// The box -b <= xi <= b over dim dimensions.
std::vector<LinearConstraint> box(std::size_t dim, int b);

ConstraintSystem with_rows(const ConstraintSystem& base,
                           const std::vector<LinearConstraint>& extra);

/// Binds dimension keep[i] to p[i] by equalities.
ConstraintSystem bind(const ConstraintSystem& base,
                      const std::vector<std::size_t>& keep,
                      const RationalPoint& p);

/// Up to `count` points of a nonempty system: LP vertices of the system cut
/// to the box |xi| <= 12 under random objectives, mixed pairwise.
std::vector<RationalPoint> sample_inside(const ConstraintSystem& system, Gen& g,
                                         std::size_t count);

/// Convex combination lambda*p + (1 - lambda)*q.
RationalPoint mix(const Rational& lambda, const RationalPoint& p,
                  const RationalPoint& q);

}  // namespace polyhull::testing
