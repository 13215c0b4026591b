#include "polyhull/hull.hpp"

#include <numeric>

#include "polyhull/errors.hpp"
#include "polyhull/lp.hpp"

namespace polyhull {

namespace {

void require_same_dim(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("hull operands have " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()) + " dimensions");
  }
}

std::vector<Integer> unit_row(std::size_t dim,
                              std::initializer_list<std::pair<std::size_t, long>> entries) {
  std::vector<Integer> row(dim, 0);
  for (const auto& [i, v] : entries) row[i] = v;
  return row;
}

Polyhedron finish(Polyhedron poly, ProjectionOptions options) {
  if (poly.is_empty()) return poly;
  ConstraintSystem system = options.minimize ? minimize_system(poly.system())
                                             : tidy(poly.system());
  return Polyhedron(poly.vars(), std::move(system));
}

}  // namespace

std::vector<LinearConstraint> scale_system(const ConstraintSystem& system,
                                           std::size_t sigma_dim,
                                           std::span<const std::size_t> embed,
                                           std::size_t target_dim) {
  if (embed.size() != system.dim()) {
    throw DimensionError("embedding covers " + std::to_string(embed.size()) +
                         " of " + std::to_string(system.dim()) + " dimensions");
  }
  std::vector<bool> used(target_dim, false);
  auto claim = [&](std::size_t d) {
    if (d >= target_dim || used[d]) {
      throw DimensionError("embedding is not injective into " +
                           std::to_string(target_dim) + " dimensions");
    }
    used[d] = true;
  };
  for (std::size_t d : embed) claim(d);
  claim(sigma_dim);

  std::vector<LinearConstraint> out;
  out.reserve(system.size());
  for (const auto& c : system) {
    std::vector<Integer> coeffs(target_dim, 0);
    for (std::size_t i = 0; i < c.dim(); ++i) coeffs[embed[i]] = c.coeff(i);
    coeffs[sigma_dim] = -c.rhs();
    // Rows of a normalized system have a nonzero coefficient, so this stays
    // a proper constraint.
    out.push_back(std::get<LinearConstraint>(
        normalize(std::move(coeffs), c.relation(), Integer(0))));
  }
  return out;
}

RelaxationSystem build_relaxation(const Polyhedron& p1, const Polyhedron& p2,
                                  bool include_sigma_bounds) {
  require_same_dim(p1, p2);
  if (p1.is_empty() || p2.is_empty()) {
    throw EmptyOperand("relaxation needs two nonempty operands");
  }
  const RelaxationLayout layout{p1.dim()};
  const std::size_t n = layout.n;
  const std::size_t total = layout.total();

  std::vector<std::size_t> embed1(n);
  std::vector<std::size_t> embed2(n);
  for (std::size_t i = 0; i < n; ++i) {
    embed1[i] = layout.y1(i);
    embed2[i] = layout.y2(i);
  }

  ConstraintSystem system(total);
  for (const auto& c : scale_system(p1.system(), layout.sigma1(), embed1, total)) {
    system.add(c);
  }
  for (const auto& c : scale_system(p2.system(), layout.sigma2(), embed2, total)) {
    system.add(c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    system.add(normalize(
        unit_row(total, {{layout.z(i), 1}, {layout.y1(i), -1}, {layout.y2(i), -1}}),
        Relation::Equal, Integer(0)));
  }
  system.add(normalize(unit_row(total, {{layout.sigma1(), 1}, {layout.sigma2(), 1}}),
                       Relation::Equal, Integer(1)));
  if (include_sigma_bounds) {
    system.add(normalize(unit_row(total, {{layout.sigma1(), -1}}),
                         Relation::LessEqual, Integer(0)));
    system.add(normalize(unit_row(total, {{layout.sigma2(), -1}}),
                         Relation::LessEqual, Integer(0)));
  }
  return RelaxationSystem{layout, std::move(system), include_sigma_bounds};
}

Polyhedron project_relaxation(const RelaxationSystem& relaxation,
                              const VarOrder& vars, ProjectionOptions options) {
  if (vars.dim() != relaxation.layout.n) {
    throw DimensionError("labels do not match the relaxation dimension");
  }
  std::vector<std::size_t> keep(relaxation.layout.n);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  return Polyhedron(vars, project_system(relaxation.system, keep, options));
}

Polyhedron convex_hull_closure(const Polyhedron& p1, const Polyhedron& p2,
                               ProjectionOptions options) {
  require_same_dim(p1, p2);
  const bool empty1 = !is_satisfiable(p1);
  const bool empty2 = !is_satisfiable(p2);
  if (empty1 && empty2) return Polyhedron::empty(p1.vars());
  if (empty1) return finish(rename(p2, p1.vars()), options);
  if (empty2) return finish(p1, options);

  RelaxationSystem relaxation = build_relaxation(p1, p2, true);
  return project_relaxation(relaxation, p1.vars(), options);
}

Polyhedron hull_many(std::span<const Polyhedron> polys,
                     ProjectionOptions options) {
  if (polys.empty()) throw EmptyList("hull of an empty list");
  for (const auto& p : polys) require_same_dim(polys.front(), p);
  if (polys.size() == 1) {
    const Polyhedron& only = polys.front();
    if (!is_satisfiable(only)) return Polyhedron::empty(only.vars());
    return finish(only, options);
  }
  Polyhedron acc = convex_hull_closure(polys[0], polys[1], options);
  for (std::size_t i = 2; i < polys.size(); ++i) {
    acc = convex_hull_closure(acc, polys[i], options);
  }
  return acc;
}

Polyhedron recession_cone(const Polyhedron& poly) {
  if (!is_satisfiable(poly)) {
    throw EmptyOperand("recession cone of an empty polyhedron");
  }
  ConstraintSystem cone(poly.dim());
  for (const auto& c : poly.system()) {
    cone.add(normalize(c.coeffs(), c.relation(), Integer(0)));
  }
  return Polyhedron(poly.vars(), tidy(cone));
}

}  // namespace polyhull
