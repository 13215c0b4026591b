#include "polyhull/projection.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <variant>

#include "polyhull/errors.hpp"
#include "polyhull/lp.hpp"

namespace polyhull {

namespace {

struct Bounds {
  std::optional<Integer> lower;
  std::optional<Integer> upper;
};

void tighten_upper(Bounds& b, const Integer& v) {
  if (!b.upper || v < *b.upper) b.upper = v;
}

void tighten_lower(Bounds& b, const Integer& v) {
  if (!b.lower || v > *b.lower) b.lower = v;
}

// |e_d| * row - sign(e_d) * row_d * e: zero at d, positive weight on row.
NormalizeResult substitute(const LinearConstraint& row,
                           const LinearConstraint& eq, std::size_t d) {
  const Integer& ed = eq.coeff(d);
  const Integer& rd = row.coeff(d);
  Integer row_weight = abs(ed);
  Integer eq_weight = sgn(ed) > 0 ? Integer(-rd) : Integer(rd);
  std::vector<Integer> coeffs(row.dim());
  for (std::size_t i = 0; i < row.dim(); ++i) {
    coeffs[i] = row_weight * row.coeff(i) + eq_weight * eq.coeff(i);
  }
  Integer rhs = row_weight * row.rhs() + eq_weight * eq.rhs();
  return normalize(std::move(coeffs), row.relation(), std::move(rhs));
}

// (-q_d) * p + p_d * q for p_d > 0 > q_d.
NormalizeResult combine(const LinearConstraint& p, const LinearConstraint& q,
                        std::size_t d) {
  Integer pw = -q.coeff(d);
  const Integer& qw = p.coeff(d);
  std::vector<Integer> coeffs(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    coeffs[i] = pw * p.coeff(i) + qw * q.coeff(i);
  }
  Integer rhs = pw * p.rhs() + qw * q.rhs();
  return normalize(std::move(coeffs), Relation::LessEqual, std::move(rhs));
}

// Equality used to pivot `d` out: fewest nonzeros, then smallest |e_d|.
const LinearConstraint* pick_pivot(const ConstraintSystem& system,
                                   std::size_t d) {
  const LinearConstraint* best = nullptr;
  for (const auto& c : system) {
    if (!c.is_equality() || c.coeff(d) == 0) continue;
    if (best == nullptr) {
      best = &c;
      continue;
    }
    std::size_t nc = c.nonzero_count();
    std::size_t nb = best->nonzero_count();
    if (nc < nb || (nc == nb && mpz_cmpabs(c.coeff(d).get_mpz_t(), best->coeff(d).get_mpz_t()) < 0)) {
      best = &c;
    }
  }
  return best;
}

bool has_equality_on(const ConstraintSystem& system, std::size_t d) {
  return std::any_of(system.begin(), system.end(), [&](const LinearConstraint& c) {
    return c.is_equality() && c.coeff(d) != 0;
  });
}

long long fm_estimate(const ConstraintSystem& system, std::size_t d) {
  long long pos = 0;
  long long neg = 0;
  for (const auto& c : system) {
    int s = sgn(c.coeff(d));
    if (s > 0) ++pos;
    if (s < 0) ++neg;
  }
  return pos * neg - pos - neg;
}

std::size_t next_dimension(const ConstraintSystem& system,
                           const std::vector<std::size_t>& remaining) {
  for (std::size_t d : remaining) {
    if (has_equality_on(system, d)) return d;
  }
  std::size_t best = remaining.front();
  long long best_cost = fm_estimate(system, best);
  for (std::size_t d : remaining) {
    long long cost = fm_estimate(system, d);
    if (cost < best_cost) {
      best = d;
      best_cost = cost;
    }
  }
  return best;
}

std::vector<std::size_t> complement(std::size_t dim,
                                    std::span<const std::size_t> keep) {
  std::vector<bool> kept(dim, false);
  for (std::size_t k : keep) {
    if (k >= dim) {
      throw DimensionError("dimension " + std::to_string(k) +
                           " out of range for a system over " +
                           std::to_string(dim));
    }
    if (kept[k]) {
      throw DimensionError("dimension " + std::to_string(k) +
                           " listed twice");
    }
    kept[k] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < dim; ++d) {
    if (!kept[d]) out.push_back(d);
  }
  return out;
}

LinearConstraint row(std::vector<Integer> coeffs, Relation relation, Integer rhs) {
  return std::get<LinearConstraint>(normalize(std::move(coeffs), relation, std::move(rhs)));
}

// A point strictly inside every inequality, or nullopt when the system has
// implicit equalities among its inequalities.
std::optional<RationalPoint> interior_point(const ConstraintSystem& system) {
  const std::size_t n = system.dim();
  std::vector<LinearConstraint> lifted;
  for (const auto& c : system) {
    std::vector<Integer> a = c.coeffs();
    a.push_back(c.is_equality() ? Integer(0) : Integer(1));
    lifted.push_back(row(std::move(a), c.relation(), c.rhs()));
  }
  std::vector<Integer> cap(n + 1);
  cap[n] = 1;
  lifted.push_back(row(cap, Relation::LessEqual, Integer(1)));
  LpOutcome best = optimize(ConstraintSystem(n + 1, std::move(lifted)), cap, Direction::Maximize);
  if (!best.is_optimal() || best.value().sign() <= 0) return std::nullopt;
  RationalPoint p = best.witness();
  p.coords.pop_back();
  return p;
}

// Greedy removal by one LP over all other rows per candidate.
ConstraintSystem prune_by_entailment(const ConstraintSystem& system) {
  // `kept` holds the equalities and every row already found irredundant. It is
  // always a subset of the surviving rows, so a row it entails can go without
  // an LP over the whole system.
  std::vector<LinearConstraint> kept;
  std::vector<LinearConstraint> pending;
  for (const auto& c : system) (c.is_equality() ? kept : pending).push_back(c);
  while (!pending.empty()) {
    LinearConstraint candidate = std::move(pending.back());
    pending.pop_back();
    if (entails(ConstraintSystem(system.dim(), kept), candidate)) continue;
    std::vector<LinearConstraint> others = kept;
    others.insert(others.end(), pending.begin(), pending.end());
    if (!entails(ConstraintSystem(system.dim(), std::move(others)), candidate)) {
      kept.push_back(std::move(candidate));
    }
  }
  return ConstraintSystem(system.dim(), std::move(kept));
}

// Drops inequalities the other rows entail. Without this, repeated
// Fourier-Motzkin steps on the lifted hull system grow into thousands of rows
// for small operands. With an interior point available this follows
// Clarkson's scheme: LPs only over the rows already proven irredundant, and a
// ray shot from the interior point to find the next irredundant row.
ConstraintSystem prune(const ConstraintSystem& system) {
  if (system.is_empty()) return system;
  std::optional<RationalPoint> inside = interior_point(system);
  if (!inside) return prune_by_entailment(system);
  const RationalPoint& x0 = *inside;

  enum class State { Pending, Kept, Dropped };
  std::vector<LinearConstraint> eqs;
  std::vector<LinearConstraint> ineqs;
  for (const auto& c : system) (c.is_equality() ? eqs : ineqs).push_back(c);
  std::vector<State> state(ineqs.size(), State::Pending);

  auto survivors_except = [&](std::size_t skip) {
    std::vector<LinearConstraint> out = eqs;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      if (i != skip && state[i] != State::Dropped) out.push_back(ineqs[i]);
    }
    return ConstraintSystem(system.dim(), std::move(out));
  };

  for (std::size_t h = 0; h < ineqs.size(); ++h) {
    while (state[h] == State::Pending) {
      std::vector<LinearConstraint> rows = eqs;
      for (std::size_t i = 0; i < ineqs.size(); ++i) {
        if (state[i] == State::Kept) rows.push_back(ineqs[i]);
      }
      rows.push_back(row(ineqs[h].coeffs(), Relation::LessEqual, ineqs[h].rhs() + 1));
      LpOutcome top = optimize(ConstraintSystem(system.dim(), std::move(rows)),
                               ineqs[h].coeffs(), Direction::Maximize);
      if (top.value() <= Rational(ineqs[h].rhs())) {
        state[h] = State::Dropped;
        break;
      }
      // Walk from x0 towards the optimum; the first row crossed alone is
      // irredundant.
      RationalPoint dir = top.witness() - x0;
      std::optional<Rational> first;
      std::size_t hit = 0;
      bool tied = false;
      for (std::size_t i = 0; i < ineqs.size(); ++i) {
        if (state[i] == State::Dropped) continue;
        Rational rate = evaluate(ineqs[i].coeffs(), dir);
        if (rate.sign() <= 0) continue;
        Rational t = (Rational(ineqs[i].rhs()) - evaluate(ineqs[i].coeffs(), x0)) / rate;
        if (!first || t < *first) {
          first = t;
          hit = i;
          tied = false;
        } else if (t == *first) {
          tied = true;
        }
      }
      if (!tied) {
        state[hit] = State::Kept;
      } else {
        state[h] = entails(survivors_except(h), ineqs[h]) ? State::Dropped : State::Kept;
      }
    }
  }
  return survivors_except(ineqs.size());
}

// Runs the greedy elimination, reporting each chosen dimension. Rows that
// became redundant are pruned after every Fourier-Motzkin step.
template <typename OnStep>
ConstraintSystem eliminate_greedy(ConstraintSystem system,
                                  std::vector<std::size_t> remaining,
                                  OnStep on_step) {
  while (!remaining.empty() && !system.is_empty()) {
    std::size_t d = next_dimension(system, remaining);
    on_step(d);
    const bool gaussian = has_equality_on(system, d);
    system = eliminate_one(system, d);
    if (!gaussian) system = prune(system);
    remaining.erase(std::find(remaining.begin(), remaining.end(), d));
  }
  // Dimensions left over after an Empty result still count as eliminated.
  for (std::size_t d : remaining) on_step(d);
  return system;
}

}  // namespace

ConstraintSystem tidy(const ConstraintSystem& system) {
  if (system.is_empty()) return system;
  // Key: coefficient vector oriented so its leading entry is positive.
  std::map<std::vector<Integer>, Bounds> groups;
  for (const auto& c : system) {
    const bool leading_negative =
        sgn(*std::find_if(c.coeffs().begin(), c.coeffs().end(),
                          [](const Integer& a) { return a != 0; })) < 0;
    if (c.is_equality()) {
      Bounds& b = groups[c.coeffs()];
      tighten_upper(b, c.rhs());
      tighten_lower(b, c.rhs());
    } else if (!leading_negative) {
      tighten_upper(groups[c.coeffs()], c.rhs());
    } else {
      std::vector<Integer> key(c.coeffs().size());
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = -c.coeff(i);
      tighten_lower(groups[key], Integer(-c.rhs()));
    }
  }

  ConstraintSystem out(system.dim());
  for (const auto& [coeffs, b] : groups) {
    if (b.lower && b.upper && *b.lower > *b.upper) {
      return ConstraintSystem::empty(system.dim());
    }
    if (b.lower && b.upper && *b.lower == *b.upper) {
      out.add(normalize(coeffs, Relation::Equal, *b.upper));
      continue;
    }
    if (b.upper) out.add(normalize(coeffs, Relation::LessEqual, *b.upper));
    if (b.lower) {
      std::vector<Integer> negated(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) negated[i] = -coeffs[i];
      out.add(normalize(std::move(negated), Relation::LessEqual,
                        Integer(-*b.lower)));
    }
  }
  std::vector<LinearConstraint> rows(out.begin(), out.end());
  sort_canonical(rows);
  return ConstraintSystem(system.dim(), std::move(rows));
}

ConstraintSystem eliminate_one(const ConstraintSystem& system, std::size_t d) {
  if (d >= system.dim()) {
    throw DimensionError("cannot eliminate dimension " + std::to_string(d) +
                         " of a system over " + std::to_string(system.dim()));
  }
  if (system.is_empty()) return system;

  ConstraintSystem out(system.dim());
  if (const LinearConstraint* pivot = pick_pivot(system, d)) {
    for (const auto& c : system) {
      if (&c == pivot) continue;
      if (c.coeff(d) == 0) {
        out.add(c);
      } else {
        out.add(substitute(c, *pivot, d));
      }
    }
    return tidy(out);
  }

  std::vector<const LinearConstraint*> pos;
  std::vector<const LinearConstraint*> neg;
  for (const auto& c : system) {
    int s = sgn(c.coeff(d));
    if (s == 0) {
      out.add(c);
    } else {
      (s > 0 ? pos : neg).push_back(&c);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) out.add(combine(*p, *q, d));
  }
  return tidy(out);
}

EliminationPlan choose_order(const ConstraintSystem& system,
                             std::span<const std::size_t> keep) {
  EliminationPlan plan{{keep.begin(), keep.end()}, {}};
  eliminate_greedy(system, complement(system.dim(), keep),
                   [&](std::size_t d) { plan.order.push_back(d); });
  return plan;
}

ConstraintSystem eliminate_in_order(const ConstraintSystem& system,
                                    std::span<const std::size_t> order) {
  ConstraintSystem current = system;
  for (std::size_t d : order) current = eliminate_one(current, d);
  return current;
}

ConstraintSystem project_system(const ConstraintSystem& system,
                                std::span<const std::size_t> keep,
                                ProjectionOptions options) {
  std::vector<std::size_t> drop = complement(system.dim(), keep);
  if (!is_satisfiable(system)) return ConstraintSystem::empty(keep.size());

  ConstraintSystem reduced =
      eliminate_greedy(system, std::move(drop), [](std::size_t) {});
  if (reduced.is_empty()) return ConstraintSystem::empty(keep.size());

  ConstraintSystem out(keep.size());
  for (const auto& c : reduced) {
    std::vector<Integer> coeffs(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) coeffs[i] = c.coeff(keep[i]);
    out.add(normalize(std::move(coeffs), c.relation(), c.rhs()));
  }
  if (options.minimize && !out.is_empty()) return minimize_system(out);
  return tidy(out);
}

Polyhedron project(const Polyhedron& poly, std::span<const std::string> onto,
                   ProjectionOptions options) {
  VarOrder target(std::vector<std::string>(onto.begin(), onto.end()));
  std::vector<std::size_t> keep;
  keep.reserve(onto.size());
  for (const auto& name : onto) {
    auto index = poly.vars().index_of(name);
    if (!index) throw UnknownVariable(name);
    keep.push_back(*index);
  }
  return Polyhedron(std::move(target),
                    project_system(poly.system(), keep, options));
}

}  // namespace polyhull
