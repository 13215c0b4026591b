#include "polyhull/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "polyhull/errors.hpp"
#include "polyhull/lp.hpp"

namespace polyhull {

namespace {

constexpr int kRetryCap = 1000;

Rational cross(const RationalPoint& o, const RationalPoint& a,
               const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
  Rational dx = a[0] - b[0];
  Rational dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

void sort_unique(std::vector<RationalPoint>& points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

RawConstraint raw(Rational a, Rational b, RawRelation rel, Rational rhs) {
  return RawConstraint{{std::move(a), std::move(b)}, rel, std::move(rhs)};
}

// Counter-clockwise hull vertices, collinear boundary points skipped.
std::vector<RationalPoint> gift_wrap(const std::vector<RationalPoint>& points) {
  const RationalPoint& start = points.front();  // lexicographically smallest
  std::vector<RationalPoint> hull;
  RationalPoint current = start;
  do {
    hull.push_back(current);
    const RationalPoint* next = nullptr;
    for (const auto& r : points) {
      if (r == current) continue;
      if (next == nullptr) {
        next = &r;
        continue;
      }
      int turn = cross(current, *next, r).sign();
      if (turn < 0 || (turn == 0 && squared_distance(current, r) >
                                        squared_distance(current, *next))) {
        next = &r;
      }
    }
    current = *next;
  } while (!(current == start));
  return hull;
}

}  // namespace

std::vector<RationalPoint> grid_points(const GridSpec& grid, std::size_t dims) {
  if (grid.lo > grid.hi) throw std::invalid_argument("grid has lo > hi");
  if (grid.step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<Rational> axis;
  for (Rational v = grid.lo; v <= grid.hi; v += grid.step) axis.push_back(v);

  std::vector<RationalPoint> out;
  std::vector<std::size_t> index(dims, 0);
  for (;;) {
    RationalPoint p{std::vector<Rational>(dims)};
    for (std::size_t i = 0; i < dims; ++i) p[i] = axis[index[i]];
    out.push_back(std::move(p));
    std::size_t i = dims;
    while (i > 0) {
      --i;
      if (++index[i] < axis.size()) break;
      index[i] = 0;
      if (i == 0) return out;
    }
    if (dims == 0) return out;
  }
}

VarOrder default_vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarOrder(std::move(names));
}

std::pair<Polyhedron, Polyhedron> cross_polytope_pair(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cross polytope needs n >= 1");
  ConstraintSystem s1(n);
  ConstraintSystem s2(n);
  s1.add(RawConstraint{std::vector<Rational>(n, Rational(-1)),
                       RawRelation::LessEqual, Rational(1)});
  s2.add(RawConstraint{std::vector<Rational>(n, Rational(1)),
                       RawRelation::LessEqual, Rational(1)});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> unit(n);
    unit[j] = 1;
    s1.add(RawConstraint{unit, RawRelation::LessEqual, Rational(0)});
    unit[j] = -1;
    s2.add(RawConstraint{unit, RawRelation::LessEqual, Rational(0)});
  }
  return {Polyhedron(default_vars(n), std::move(s1)),
          Polyhedron(default_vars(n), std::move(s2))};
}

bool is_bounded(const Polyhedron& poly) {
  for (std::size_t i = 0; i < poly.dim(); ++i) {
    std::vector<Rational> axis(poly.dim());
    axis[i] = 1;
    for (Direction dir : {Direction::Maximize, Direction::Minimize}) {
      if (optimize(poly.system(), axis, dir).is_unbounded()) return false;
    }
  }
  return true;
}

std::vector<RationalPoint> vertices_2d(const Polyhedron& poly) {
  auto rows = poly.system().constraints();
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Rational a1(rows[i].coeff(0)), b1(rows[i].coeff(1)), c1(rows[i].rhs());
      Rational a2(rows[j].coeff(0)), b2(rows[j].coeff(1)), c2(rows[j].rhs());
      Rational det = a1 * b2 - a2 * b1;
      if (det.is_zero()) continue;
      RationalPoint p{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
      if (satisfies(p, poly)) out.push_back(std::move(p));
    }
  }
  sort_unique(out);
  return out;
}

Polyhedron hull_2d_vertex_oracle(const Polyhedron& p1, const Polyhedron& p2) {
  if (p1.dim() != 2 || p2.dim() != 2) {
    throw DimensionError("the vertex oracle only handles 2D operands");
  }
  for (const Polyhedron* p : {&p1, &p2}) {
    if (!is_satisfiable(*p)) throw EmptyOperand("vertex oracle operand is empty");
    if (!is_bounded(*p)) throw UnboundedOperand("vertex oracle operand is unbounded");
  }

  std::vector<RationalPoint> points = vertices_2d(p1);
  for (auto& v : vertices_2d(p2)) points.push_back(std::move(v));
  sort_unique(points);

  ConstraintSystem out(2);
  const RationalPoint& a = points.front();
  const RationalPoint& b = points.back();
  if (points.size() == 1) {
    out.add(raw(1, 0, RawRelation::Equal, a[0]));
    out.add(raw(0, 1, RawRelation::Equal, a[1]));
    return Polyhedron(p1.vars(), std::move(out));
  }

  bool collinear = std::all_of(points.begin(), points.end(), [&](const RationalPoint& p) {
    return cross(a, b, p).is_zero();
  });
  if (collinear) {
    // a and b are the extreme points of the lexicographically sorted set.
    Rational ux = b[0] - a[0];
    Rational uy = b[1] - a[1];
    out.add(raw(-uy, ux, RawRelation::Equal, -uy * a[0] + ux * a[1]));
    out.add(raw(ux, uy, RawRelation::GreaterEqual, ux * a[0] + uy * a[1]));
    out.add(raw(ux, uy, RawRelation::LessEqual, ux * b[0] + uy * b[1]));
    return Polyhedron(p1.vars(), std::move(out));
  }

  std::vector<RationalPoint> hull = gift_wrap(points);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RationalPoint& p = hull[i];
    const RationalPoint& q = hull[(i + 1) % hull.size()];
    // Interior lies to the left of p -> q.
    Rational dx = q[0] - p[0];
    Rational dy = q[1] - p[1];
    out.add(raw(-dy, dx, RawRelation::GreaterEqual, dx * p[1] - dy * p[0]));
  }
  return Polyhedron(p1.vars(), std::move(out));
}

Polyhedron random_polyhedron(std::size_t n, std::size_t m, std::uint64_t seed,
                             bool bounded) {
  if (n == 0 || m == 0) throw std::invalid_argument("random polyhedron needs n, m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> rhs(-10, 10);
  std::uniform_int_distribution<int> kind(0, 5);

  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    ConstraintSystem system(n);
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Rational> a(n);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& v : a) {
          v = coeff(rng);
          nonzero = nonzero || !v.is_zero();
        }
      }
      RawRelation rel = kind(rng) == 0 ? RawRelation::Equal : RawRelation::LessEqual;
      system.add(RawConstraint{std::move(a), rel, Rational(rhs(rng))});
    }
    if (bounded) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> unit(n);
        unit[i] = 1;
        system.add(RawConstraint{unit, RawRelation::LessEqual, Rational(10)});
        unit[i] = -1;
        system.add(RawConstraint{unit, RawRelation::LessEqual, Rational(10)});
      }
    }
    if (is_satisfiable(system)) return Polyhedron(default_vars(n), std::move(system));
  }
  throw GenerationFailure("no satisfiable system after " +
                          std::to_string(kRetryCap) + " draws");
}

}  // namespace polyhull
