#include "polyhull/lp.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "polyhull/errors.hpp"

namespace polyhull {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Simplex dictionary for  max c.x  s.t.  A x <= b,  x free.
//
// Variables 0..n-1 are the free structural ones, n..n+m-1 the slacks
// s_i = b_i - a_i.x >= 0, and n+m the phase-one auxiliary. Each row reads
//   x_basic = value + sum_k coef[k] * x_{nonbasic[k]}
// so the dictionary is m x n rather than m x (n + m), which keeps pivots
// cheap for the tall, narrow systems elimination produces.
//
// Free variables are pivoted into the basis first and never leave it: their
// rows are skipped by the ratio test. A free variable that cannot enter has
// a zero column in every slack row and stays nonbasic at zero.
class Dictionary {
 public:
  explicit Dictionary(const ConstraintSystem& system) : n_(system.dim()) {
    std::size_t m = 0;
    for (const auto& c : system) {
      add_row(c.coeffs(), c.rhs(), false, m++);
      if (c.is_equality()) add_row(c.coeffs(), c.rhs(), true, m++);
    }
    aux_ = n_ + m;
    nonbasic_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
  }

  // Phase zero and phase one. Returns false iff the system is infeasible.
  bool make_feasible() {
    pivot_free_variables();

    std::size_t worst = kNone;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (is_free(rows_[r].basic) || rows_[r].value.sign() >= 0) continue;
      if (worst == kNone || rows_[r].value < rows_[worst].value) worst = r;
    }
    if (worst == kNone) return true;

    // Relax every slack row by the auxiliary x0 >= 0 and maximize -x0.
    nonbasic_.push_back(aux_);
    for (auto& row : rows_) row.coef.emplace_back(is_free(row.basic) ? 0 : 1);
    objective_ = Row{kNone, Rational(), std::vector<Rational>(nonbasic_.size())};
    objective_.coef.back() = -1;
    pivot(worst, nonbasic_.size() - 1);

    run_simplex();
    if (objective_.value.sign() < 0) return false;
    drop_auxiliary();
    return true;
  }

  // Requires make_feasible() to have returned true.
  LpOutcome maximize(std::span<const Rational> c) {
    objective_ = Row{kNone, Rational(), std::vector<Rational>(nonbasic_.size())};
    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      if (nonbasic_[k] < n_) objective_.coef[k] += c[nonbasic_[k]];
    }
    for (const auto& row : rows_) {
      if (!is_free(row.basic) || c[row.basic].is_zero()) continue;
      const Rational& w = c[row.basic];
      objective_.value.add_product(w, row.value);
      for (std::size_t k = 0; k < row.coef.size(); ++k) {
        if (!row.coef[k].is_zero()) objective_.coef[k].add_product(w, row.coef[k]);
      }
    }
    if (!run_simplex()) return LpOutcome::unbounded();
    return LpOutcome::optimal(objective_.value, point());
  }

  RationalPoint point() const {
    RationalPoint p{std::vector<Rational>(n_)};
    for (const auto& row : rows_) {
      if (is_free(row.basic)) p[row.basic] = row.value;
    }
    return p;
  }

 private:
  struct Row {
    std::size_t basic;
    Rational value;
    std::vector<Rational> coef;
  };

  bool is_free(std::size_t var) const { return var < n_; }

  void add_row(const std::vector<Integer>& a, const Integer& b, bool negate,
               std::size_t index) {
    Row row{n_ + index, Rational(negate ? Integer(-b) : b), {}};
    row.coef.reserve(n_ + 1);
    for (const auto& aj : a) row.coef.emplace_back(negate ? aj : Integer(-aj));
    rows_.push_back(std::move(row));
  }

  void pivot_free_variables() {
    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      if (!is_free(nonbasic_[k])) continue;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!is_free(rows_[r].basic) && !rows_[r].coef[k].is_zero()) {
          pivot(r, k);
          break;
        }
      }
    }
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool run_simplex() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        const Rational& d = objective_.coef[k];
        if (is_free(nonbasic_[k])) {
          // Zero column in every slack row: moves freely in both directions.
          if (!d.is_zero()) return false;
          continue;
        }
        if (d.sign() > 0 && (enter == kNone || nonbasic_[k] < nonbasic_[enter])) {
          enter = k;
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Row& row = rows_[r];
        if (is_free(row.basic) || row.coef[enter].sign() >= 0) continue;
        Rational ratio = row.value / -row.coef[enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && row.basic < rows_[leave].basic)) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drop_auxiliary() {
    auto in_row = std::find_if(rows_.begin(), rows_.end(),
                               [&](const Row& row) { return row.basic == aux_; });
    if (in_row != rows_.end()) {
      std::size_t r = static_cast<std::size_t>(in_row - rows_.begin());
      std::size_t k = 0;
      while (k < nonbasic_.size() && rows_[r].coef[k].is_zero()) ++k;
      if (k == nonbasic_.size()) {
        rows_.erase(in_row);
      } else {
        pivot(r, k);
      }
    }
    auto pos = std::find(nonbasic_.begin(), nonbasic_.end(), aux_);
    if (pos == nonbasic_.end()) {
      objective_.coef.clear();
      return;
    }
    std::size_t k = static_cast<std::size_t>(pos - nonbasic_.begin());
    nonbasic_.erase(pos);
    for (auto& row : rows_) row.coef.erase(row.coef.begin() + k);
    objective_.coef.clear();
  }

  void pivot(std::size_t r, std::size_t k) {
    Row& p = rows_[r];
    Rational inv = Rational(1) / p.coef[k];
    Rational scale = -inv;
    for (std::size_t j = 0; j < p.coef.size(); ++j) {
      if (j != k && !p.coef[j].is_zero()) p.coef[j] *= scale;
    }
    p.coef[k] = inv;
    p.value *= scale;
    std::swap(p.basic, nonbasic_[k]);

    auto eliminate = [&](Row& row) {
      if (row.coef[k].is_zero()) return;
      Rational t = row.coef[k];
      for (std::size_t j = 0; j < p.coef.size(); ++j) {
        if (j != k && !p.coef[j].is_zero()) row.coef[j].add_product(t, p.coef[j]);
      }
      row.coef[k] = t * inv;
      row.value.add_product(t, p.value);
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    if (!objective_.coef.empty()) eliminate(objective_);
  }

  std::size_t n_;
  std::size_t aux_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> nonbasic_;
  Row objective_{kNone, Rational(), {}};
};

void check_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + " has " + std::to_string(actual) +
                         " dimensions, expected " + std::to_string(expected));
  }
}

std::vector<Rational> to_rationals(std::span<const Integer> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

bool is_satisfiable(const ConstraintSystem& system) {
  if (system.is_empty()) return false;
  Dictionary d(system);
  return d.make_feasible();
}

bool is_satisfiable(const Polyhedron& poly) {
  return is_satisfiable(poly.system());
}

LpOutcome optimize(const ConstraintSystem& system,
                   std::span<const Rational> objective, Direction direction) {
  check_dim(system.dim(), objective.size(), "objective");
  if (system.is_empty()) return LpOutcome::infeasible();
  Dictionary d(system);
  if (!d.make_feasible()) return LpOutcome::infeasible();
  if (direction == Direction::Maximize) return d.maximize(objective);

  std::vector<Rational> negated(objective.begin(), objective.end());
  for (auto& v : negated) v = -v;
  LpOutcome out = d.maximize(negated);
  if (!out.is_optimal()) return out;
  return LpOutcome::optimal(-out.value(), out.witness());
}

LpOutcome optimize(const ConstraintSystem& system,
                   std::span<const Integer> objective, Direction direction) {
  auto rational = to_rationals(objective);
  return optimize(system, std::span<const Rational>(rational), direction);
}

bool entails(const ConstraintSystem& system, const LinearConstraint& c) {
  check_dim(system.dim(), c.dim(), "constraint");
  if (system.is_empty()) return true;
  Dictionary d(system);
  if (!d.make_feasible()) return true;
  Rational bound(c.rhs());
  auto objective = to_rationals(c.coeffs());
  LpOutcome upper = d.maximize(objective);
  if (!upper.is_optimal() || upper.value() > bound) return false;
  if (!c.is_equality()) return true;
  for (auto& v : objective) v = -v;
  LpOutcome lower = d.maximize(objective);
  return lower.is_optimal() && -lower.value() >= bound;
}

bool entails(const Polyhedron& poly, const LinearConstraint& c) {
  return entails(poly.system(), c);
}

bool is_subset(const ConstraintSystem& inner, const ConstraintSystem& outer) {
  check_dim(inner.dim(), outer.dim(), "system");
  if (!is_satisfiable(inner)) return true;
  if (outer.is_empty()) return false;
  return std::all_of(outer.begin(), outer.end(), [&](const LinearConstraint& c) {
    return entails(inner, c);
  });
}

bool is_subset(const Polyhedron& inner, const Polyhedron& outer) {
  return is_subset(inner.system(), outer.system());
}

bool set_equal(const ConstraintSystem& a, const ConstraintSystem& b) {
  return is_subset(a, b) && is_subset(b, a);
}

bool set_equal(const Polyhedron& a, const Polyhedron& b) {
  return set_equal(a.system(), b.system());
}

namespace {

// Row-reduced basis used to pick linearly independent equalities.
class EqualityBasis {
 public:
  explicit EqualityBasis(std::size_t dim) : dim_(dim) {}

  // Adds the row if it is independent of those already present.
  bool insert(const std::vector<Integer>& coeffs) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& t = v[pivots_[i]];
      if (t.is_zero()) continue;
      Rational factor = -t;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!rows_[i][j].is_zero()) v[j].add_product(factor, rows_[i][j]);
      }
    }
    auto lead = std::find_if(v.begin(), v.end(),
                             [](const Rational& x) { return !x.is_zero(); });
    if (lead == v.end()) return false;
    std::size_t p = static_cast<std::size_t>(lead - v.begin());
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    // Keep the basis fully reduced in its pivot columns.
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      Rational factor = -row[p];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) row[j].add_product(factor, v[j]);
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Inequalities that hold with equality on the whole (satisfiable) system.
std::vector<bool> find_implicit_equalities(const ConstraintSystem& system,
                                           std::span<const LinearConstraint> ineqs) {
  std::vector<bool> implicit(ineqs.size(), false);
  if (ineqs.empty()) return implicit;
  const std::size_t n = system.dim();

  // max t  s.t.  a.x + t <= b for the inequalities, equalities kept, t <= 1.
  // A positive optimum makes every inequality strict at once.
  ConstraintSystem lifted(n + 1);
  for (const auto& c : system) {
    std::vector<Integer> coeffs = c.coeffs();
    coeffs.emplace_back(c.is_equality() ? 0 : 1);
    lifted.add(normalize(std::move(coeffs), c.relation(), c.rhs()));
  }
  std::vector<Integer> t_only(n + 1, 0);
  t_only[n] = 1;
  lifted.add(normalize(t_only, Relation::LessEqual, Integer(1)));
  std::vector<Rational> objective(n + 1);
  objective[n] = 1;
  LpOutcome slack = optimize(lifted, objective, Direction::Maximize);
  if (slack.is_optimal() && slack.value().sign() > 0) return implicit;

  // Otherwise test each row; every witness clears the rows it leaves slack.
  std::vector<bool> decided(ineqs.size(), false);
  Dictionary base(system);
  base.make_feasible();
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (decided[i]) continue;
    Dictionary d = base;
    auto negated = to_rationals(ineqs[i].coeffs());
    for (auto& v : negated) v = -v;
    LpOutcome lowest = d.maximize(negated);
    decided[i] = true;
    if (!lowest.is_optimal()) continue;
    if (-lowest.value() == Rational(ineqs[i].rhs())) implicit[i] = true;
    const RationalPoint& w = lowest.witness();
    for (std::size_t j = i + 1; j < ineqs.size(); ++j) {
      if (!decided[j] && evaluate(ineqs[j].coeffs(), w) < Rational(ineqs[j].rhs())) {
        decided[j] = true;
      }
    }
  }
  return implicit;
}

void dedup(std::vector<LinearConstraint>& v) {
  sort_canonical(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConstraintSystem minimize_system(const ConstraintSystem& system) {
  if (!is_satisfiable(system)) {
    throw UnsatisfiableInput("cannot minimize an unsatisfiable system");
  }
  const std::size_t n = system.dim();

  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> equalities;
  for (const auto& c : system) {
    (c.is_equality() ? equalities : ineqs).push_back(c);
  }
  dedup(ineqs);

  std::vector<bool> implicit = find_implicit_equalities(system, ineqs);
  std::vector<LinearConstraint> slack_rows;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (!implicit[i]) {
      slack_rows.push_back(ineqs[i]);
      continue;
    }
    auto eq = normalize(ineqs[i].coeffs(), Relation::Equal, ineqs[i].rhs());
    equalities.push_back(std::get<LinearConstraint>(eq));
  }

  dedup(equalities);
  std::vector<LinearConstraint> kept;
  EqualityBasis basis(n);
  for (const auto& e : equalities) {
    if (basis.insert(e.coeffs())) kept.push_back(e);
  }
  const std::size_t equality_count = kept.size();

  // Greedy removal in canonical order: drop a row when the others entail it.
  std::vector<bool> removed(slack_rows.size(), false);
  for (std::size_t i = 0; i < slack_rows.size(); ++i) {
    ConstraintSystem rest(n);
    for (std::size_t e = 0; e < equality_count; ++e) rest.add(kept[e]);
    for (std::size_t j = 0; j < slack_rows.size(); ++j) {
      if (j != i && !removed[j]) rest.add(slack_rows[j]);
    }
    if (entails(rest, slack_rows[i])) removed[i] = true;
  }
  for (std::size_t i = 0; i < slack_rows.size(); ++i) {
    if (!removed[i]) kept.push_back(slack_rows[i]);
  }
  sort_canonical(kept);
  return ConstraintSystem(n, std::move(kept));
}

}  // namespace polyhull
