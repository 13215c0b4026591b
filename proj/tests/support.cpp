#include "support.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "polyhull/lp.hpp"

namespace polyhull::testing {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ConstraintSystem Gen::system_around(const RationalPoint& anchor, std::size_t rows,
                                    int eq_one_in) {
  ConstraintSystem s(anchor.dim());
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Rational> a = row(anchor.dim(), 4);
    Rational value;
    for (std::size_t i = 0; i < a.size(); ++i) value += a[i] * anchor[i];
    bool eq = coin(eq_one_in);
    Rational rhs = eq ? value : value + Rational(integer(0, 4));
    s.add(RawConstraint{std::move(a), eq ? RawRelation::Equal : RawRelation::LessEqual,
                        std::move(rhs)});
  }
  return s;
}

std::optional<RationalPoint> solve_square(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      b[r] -= f * b[col];
    }
  }
  RationalPoint x;
  for (std::size_t i = 0; i < n; ++i) x.coords.push_back(b[i] / m[i][i]);
  return x;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start,
                  std::vector<std::size_t>& pick,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (pick.size() == k) {
    f(pick);
    return;
  }
  for (std::size_t i = start; i + (k - pick.size()) <= n; ++i) {
    pick.push_back(i);
    combinations(n, k, i + 1, pick, f);
    pick.pop_back();
  }
}

}  // namespace

std::vector<RationalPoint> brute_vertices(const ConstraintSystem& system) {
  std::vector<RationalPoint> out;
  if (system.is_empty()) return out;
  const std::size_t n = system.dim();
  auto rows = system.constraints();
  std::vector<std::size_t> pick;
  combinations(rows.size(), n, 0, pick, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> b;
    for (std::size_t i : idx) {
      std::vector<Rational> r;
      for (const auto& a : rows[i].coeffs()) r.emplace_back(a);
      m.push_back(std::move(r));
      b.emplace_back(rows[i].rhs());
    }
    auto x = solve_square(std::move(m), std::move(b));
    if (x && satisfies(*x, system)) out.push_back(std::move(*x));
  });
  return out;
}

std::optional<Rational> brute_max(const ConstraintSystem& system,
                                  const std::vector<Rational>& objective) {
  std::optional<Rational> best;
  for (const auto& v : brute_vertices(system)) {
    Rational value;
    for (std::size_t i = 0; i < v.dim(); ++i) value += objective[i] * v[i];
    if (!best || value > *best) best = value;
  }
  return best;
}

bool brute_entails(const ConstraintSystem& system, const LinearConstraint& c) {
  std::vector<Rational> a(c.coeffs().begin(), c.coeffs().end());
  auto hi = brute_max(system, a);
  if (!hi) return true;
  if (*hi > Rational(c.rhs())) return false;
  if (!c.is_equality()) return true;
  for (auto& v : a) v = -v;
  return -*brute_max(system, a) >= Rational(c.rhs());
}

std::vector<LinearConstraint> box(std::size_t dim, int b) {
  std::vector<LinearConstraint> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> a(dim);
      a[i] = s;
      out.push_back(make_constraint(RawConstraint{a, RawRelation::LessEqual, Rational(b)}));
    }
  }
  return out;
}

ConstraintSystem with_rows(const ConstraintSystem& base,
                           const std::vector<LinearConstraint>& extra) {
  ConstraintSystem out = base;
  for (const auto& c : extra) out.add(c);
  return out;
}

ConstraintSystem bind(const ConstraintSystem& base,
                      const std::vector<std::size_t>& keep,
                      const RationalPoint& p) {
  ConstraintSystem out = base;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<Rational> a(base.dim());
    a[keep[i]] = 1;
    out.add(RawConstraint{std::move(a), RawRelation::Equal, p[i]});
  }
  return out;
}

std::vector<RationalPoint> sample_inside(const ConstraintSystem& system, Gen& g,
                                         std::size_t count) {
  ConstraintSystem cut = with_rows(system, box(system.dim(), 12));
  std::vector<RationalPoint> vertices;
  for (std::size_t k = 0; k < count; ++k) {
    LpOutcome r = optimize(cut, g.row(system.dim(), 3), Direction::Maximize);
    if (!r.is_optimal()) return {};
    vertices.push_back(r.witness());
  }
  std::vector<RationalPoint> out;
  for (std::size_t k = 0; k < count; ++k) {
    const RationalPoint& a = vertices[g.integer(0, static_cast<int>(count) - 1)];
    const RationalPoint& b = vertices[g.integer(0, static_cast<int>(count) - 1)];
    out.push_back(mix(Q(g.integer(0, 4), 4), a, b));
  }
  return out;
}

RationalPoint mix(const Rational& lambda, const RationalPoint& p,
                  const RationalPoint& q) {
  return lambda * p + (Rational(1) - lambda) * q;
}

}  // namespace polyhull::testing
