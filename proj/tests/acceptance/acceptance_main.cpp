// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "polyhull/cli.hpp"
#include "polyhull/errors.hpp"
#include "polyhull/hull.hpp"
#include "polyhull/lp.hpp"
#include "polyhull/oracle.hpp"
#include "polyhull/poly_format.hpp"
#include "polyhull/projection.hpp"
#include "support.hpp"

namespace {

using namespace polyhull;
using testing::Gen;
using testing::P;
using testing::Q;

const char* kP1 = "vars x y\nx = 0\ny = 1\n";
const char* kP2 = "vars x y\nx >= 0\ny = x\n";
const char* kHull = "vars x y\nx >= 0\nx <= y\ny <= x + 1\n";

// Collects the first failure message of a criterion.
struct Check {
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Check golden_hull() {
  Check c;
  Polyhedron h = convex_hull_closure(P(kP1), P(kP2));
  c.require(set_equal(h, P(kHull)), "hull differs from {x >= 0, x <= y, y <= x + 1}");
  return c;
}

Check sigma_counterexample() {
  Check c;
  RelaxationSystem r = build_relaxation(P(kP1), P(kP2), false);
  Polyhedron wrong = project_relaxation(r, P(kP1).vars());
  Polyhedron right = P(kHull);
  c.require(set_equal(wrong, P("vars x y\nx >= 0\n")), "projection is not {x >= 0}");
  c.require(is_subset(right, wrong) && !is_subset(wrong, right),
            "projection is not strictly larger than the hull");
  return c;
}

Check golden_projection() {
  Check c;
  Polyhedron s = P("vars x y z\ny + z >= x\nx >= y + 2*z\ny >= 0\nz >= 0\n");
  std::vector<std::string> onto{"x", "y"};
  c.require(set_equal(project(s, onto), P("vars x y\ny >= 0\nx = y\n")),
            "projection differs from {y >= 0, x = y}");
  return c;
}

ConstraintSystem cross_facets(std::size_t n) {
  ConstraintSystem facets(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back((mask >> i) & 1 ? Q(-1) : Q(1));
    facets.add(RawConstraint{a, RawRelation::LessEqual, Q(1)});
  }
  return facets;
}

Check cross_polytope_four() {
  Check c;
  auto [p1, p2] = cross_polytope_pair(4);
  Polyhedron h = convex_hull_closure(p1, p2);
  c.require(h.system().size() == 16,
            "hull has " + std::to_string(h.system().size()) + " constraints");
  c.require(set_equal(h.system(), cross_facets(4)), "hull is not {+-x1+-x2+-x3+-x4 <= 1}");
  return c;
}

Check facet_scaling() {
  Check c;
  for (std::size_t n = 2; n <= 5; ++n) {
    auto [p1, p2] = cross_polytope_pair(n);
    std::size_t k = convex_hull_closure(p1, p2).system().size();
    c.require(k == (std::size_t{1} << n),
              "n = " + std::to_string(n) + " gives " + std::to_string(k) + " constraints");
    ++c.cases;
  }
  return c;
}

Check closure_witness() {
  Check c;
  Polyhedron h = convex_hull_closure(P(kP1), P(kP2));
  c.require(satisfies(RationalPoint{Q(1), Q(2)}, h), "(1, 2) is not in the hull");
  return c;
}

Check projection_iff() {
  Check c;
  Gen g(701);
  std::size_t inside = 0;
  std::size_t outside = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::size_t n = 1 + seed % 5;
    std::size_t m = 1 + (seed * 7) % 10;
    Polyhedron poly = random_polyhedron(n, m, 7000 + seed, seed % 3 == 0);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.coin(2)) keep.push_back(i);
    }
    if (keep.empty()) keep.push_back(n - 1);
    ConstraintSystem proj = project_system(poly.system(), keep);

    // Half the points come from the polyhedron itself, half are arbitrary.
    std::vector<RationalPoint> points;
    for (const auto& q : testing::sample_inside(poly.system(), g, 10)) {
      RationalPoint r;
      for (std::size_t i : keep) r.coords.push_back(q[i]);
      points.push_back(r);
      points.push_back(r + g.point(keep.size(), 1, 3));
    }
    while (points.size() < 24) points.push_back(g.point(keep.size(), 8, 3));

    for (const auto& p : points) {
      bool lhs = satisfies(p, proj);
      bool rhs = is_satisfiable(testing::bind(poly.system(), keep, p));
      c.require(lhs == rhs, "iff fails for seed " + std::to_string(seed));
      (lhs ? inside : outside) += 1;
      ++c.cases;
    }
  }
  c.require(inside > 200 && outside > 200, "sampled points are too one-sided");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(inside) + " in, " +
              std::to_string(outside) + " out";
  return c;
}

std::pair<Polyhedron, Polyhedron> operand_pair(std::uint64_t seed, std::size_t max_dim) {
  std::size_t n = 1 + seed % max_dim;
  return {random_polyhedron(n, 1 + seed % 5, 2 * seed, seed % 2 == 0),
          random_polyhedron(n, 1 + (seed / 2) % 5, 2 * seed + 1, seed % 3 == 0)};
}

Check hull_properties() {
  Check c;
  Gen g(801);
  for (std::uint64_t seed = 8000; seed < 8110; ++seed) {
    auto [p1, p2] = operand_pair(seed, 4);
    std::string tag = " (seed " + std::to_string(seed) + ")";
    Polyhedron h = convex_hull_closure(p1, p2);
    for (const auto& row : h.system()) {
      c.require(entails(p1, row) && entails(p2, row), "containment" + tag);
    }
    auto a = testing::sample_inside(p1.system(), g, 3);
    auto b = testing::sample_inside(p2.system(), g, 3);
    auto inner = testing::sample_inside(h.system(), g, 3);
    a.insert(a.end(), inner.begin(), inner.end());
    for (const auto& p : a) {
      for (const auto& q : b) {
        for (int k = 0; k <= 4; ++k) {
          c.require(satisfies(testing::mix(Q(k, 4), p, q), h), "convexity" + tag);
        }
      }
    }
    c.require(set_equal(h, convex_hull_closure(p2, p1)), "commutativity" + tag);
    c.require(set_equal(convex_hull_closure(p1, p1), p1), "idempotence" + tag);
    ++c.cases;
  }
  return c;
}

Check vertex_oracle() {
  Check c;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Polyhedron p1 = random_polyhedron(2, 1 + seed % 5, 9000 + 2 * seed, true);
    Polyhedron p2 = random_polyhedron(2, 1 + (seed / 5) % 5, 9001 + 2 * seed, true);
    c.require(set_equal(convex_hull_closure(p1, p2), hull_2d_vertex_oracle(p1, p2)),
              "mismatch at seed " + std::to_string(seed));
    ++c.cases;
  }
  return c;
}

Check recession_law() {
  Check c;
  Gen g(1001);
  std::size_t nontrivial = 0;
  for (std::uint64_t seed = 10000; seed < 10060; ++seed) {
    std::size_t n = 1 + seed % 3;
    Polyhedron p1 = random_polyhedron(n, 1 + seed % 4, 2 * seed, false);
    Polyhedron p2 = random_polyhedron(n, 1 + seed % 5, 2 * seed + 1, seed % 2 == 0);
    Polyhedron h = convex_hull_closure(p1, p2);
    auto ds = testing::sample_inside(recession_cone(p1).system(), g, 4);
    auto ps = testing::sample_inside(p2.system(), g, 4);
    for (const auto& d : ds) {
      bool zero = true;
      for (const auto& v : d.coords) zero = zero && v.is_zero();
      if (!zero) ++nontrivial;
      for (const auto& p : ps) {
        for (long lambda : {1, 2, 4}) {
          c.require(satisfies(p + Rational(lambda) * d, h),
                    "p + lambda*d outside the hull at seed " + std::to_string(seed));
        }
      }
    }
    ++c.cases;
  }
  c.require(nontrivial > 50, "too few nonzero recession directions sampled");
  return c;
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(POLYHULL_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Check cli_round_trip() {
  Check c;
  const std::vector<std::string> golden{"hull_a.poly", "hull_b.poly", "hull_ab.poly",
                                        "proj_in.poly",    "proj_out.poly", "cross4_hull.poly",
                                        "empty.poly"};
  for (const auto& name : golden) {
    Polyhedron p = parse_poly(testing::read_file(testing::data_path(name)));
    std::string text = format_poly(p);
    Polyhedron back = parse_poly(text);
    c.require(set_equal(p, back), "round trip changes " + name);
    c.require(format_poly(back) == text, "format is not a fixed point for " + name);
    ++c.cases;
  }
  const std::string d = std::string(POLYHULL_TEST_DATA) + "/";
  const std::vector<std::string> commands{
      "hull " + d + "hull_a.poly " + d + "hull_b.poly",
      "project " + d + "proj_in.poly --onto x,y",
      "crosspoly -n 4 --emit hull",
      "minimize " + d + "cross4_hull.poly",
      "hull --raw " + d + "hull_b.poly " + d + "hull_a.poly " + d + "proj_out.poly",
  };
  for (const auto& args : commands) {
    std::string first = run_binary(args);
    for (int k = 0; k < 2; ++k) {
      c.require(run_binary(args) == first, "output changes between runs: " + args);
    }
    ++c.cases;
  }
  c.require(run_binary(commands[0]) == "vars x y\nx >= 0\nx - y <= 0\nx - y >= -1\n",
            "hull command output differs from the golden text");
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed hull golden", 1, golden_hull},
      {2, "sigma-bound counterexample", 1, sigma_counterexample},
      {3, "projection golden", 1, golden_projection},
      {4, "4D cross polytope hull", 10, cross_polytope_four},
      {5, "facet scaling n = 2..5", 120, facet_scaling},
      {6, "closure witness (1, 2)", 1, closure_witness},
      {7, "projection iff-property", 60, projection_iff},
      {8, "hull property suite", 120, hull_properties},
      {9, "2D vertex oracle equivalence", 60, vertex_oracle},
      {10, "recession-cone law", 60, recession_law},
      {11, "CLI round trip and determinism", 60, cli_round_trip},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = crit.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && seconds > crit.limit_seconds) {
      result.ok = false;
      result.detail = "over the time limit";
    }
    if (!result.ok) ++failures;

    std::ostringstream line;
    line << (result.ok ? "PASS" : "FAIL") << "  " << crit.id << ". " << crit.name << "  ["
         << std::fixed;
    line.precision(3);
    line << seconds << " s / " << crit.limit_seconds << " s";
    if (result.cases > 0) line << ", " << result.cases << " cases";
    line << "]";
    if (!result.detail.empty()) line << "  " << result.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
