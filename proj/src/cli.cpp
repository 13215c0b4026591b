#include "polyhull/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "polyhull/errors.hpp"
#include "polyhull/hull.hpp"
#include "polyhull/lp.hpp"
#include "polyhull/oracle.hpp"
#include "polyhull/poly_format.hpp"
#include "polyhull/projection.hpp"

namespace polyhull {

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2 };

Polyhedron read_poly(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_poly(text.str());
  } catch (const SyntaxError& e) {
    throw Error(path + ":" + e.what());
  }
}

void write_poly(const Polyhedron& poly, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << format_poly(poly);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << format_poly(poly);
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw Error("empty name in --onto list");
    names.push_back(name);
  }
  return names;
}

bool entails_text(const Polyhedron& poly, const std::string& text) {
  NormalizeResult c = normalize(parse_constraint(text, poly.vars()));
  if (std::holds_alternative<TriviallyTrue>(c)) return true;
  if (std::holds_alternative<TriviallyFalse>(c)) return !is_satisfiable(poly);
  return entails(poly, std::get<LinearConstraint>(c));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact convex polyhedra: projection, entailment and closed convex hull"};
  app.name("polyhull");
  app.require_subcommand(1);

  std::function<int()> action;
  std::string file;
  std::string file2;
  std::vector<std::string> files;
  std::string output;
  std::string onto;
  std::string constraint;
  std::string emit = "hull";
  std::size_t n = 0;
  std::size_t pairs = 20;
  std::uint64_t seed = 1;
  bool raw = false;

  auto* sat = app.add_subcommand("sat", "Check satisfiability (exit 0 sat, 1 unsat)");
  sat->add_option("FILE", file)->required();
  sat->callback([&] {
    action = [&] {
      bool yes = is_satisfiable(read_poly(file));
      out << (yes ? "sat" : "unsat") << '\n';
      return yes ? kYes : kNo;
    };
  });

  auto* proj = app.add_subcommand("project", "Project onto a subset of the variables");
  proj->add_option("FILE", file)->required();
  proj->add_option("--onto", onto, "Comma-separated variables to keep")->required();
  proj->add_option("-o,--output", output, "Write the result to a file");
  proj->add_flag("--raw", raw, "Skip the final minimization");
  proj->callback([&] {
    action = [&] {
      Polyhedron poly = read_poly(file);
      std::vector<std::string> names = split_names(onto);
      write_poly(project(poly, names, ProjectionOptions{!raw}), output, out);
      return kYes;
    };
  });

  auto* hull = app.add_subcommand("hull", "Closed convex hull of the union of the inputs");
  hull->add_option("FILES", files)->required();
  hull->add_option("-o,--output", output, "Write the result to a file");
  hull->add_flag("--raw", raw, "Skip the final minimization");
  hull->callback([&] {
    action = [&] {
      std::vector<Polyhedron> polys;
      for (const auto& f : files) polys.push_back(read_poly(f));
      write_poly(hull_many(polys, ProjectionOptions{!raw}), output, out);
      return kYes;
    };
  });

  auto* ent = app.add_subcommand("entails", "Check that a constraint holds everywhere");
  ent->add_option("FILE", file)->required();
  ent->add_option("CONSTRAINT", constraint)->required();
  ent->callback([&] {
    action = [&] {
      bool yes = entails_text(read_poly(file), constraint);
      out << (yes ? "yes" : "no") << '\n';
      return yes ? kYes : kNo;
    };
  });

  auto* mini = app.add_subcommand("minimize", "Remove redundant constraints");
  mini->add_option("FILE", file)->required();
  mini->add_option("-o,--output", output, "Write the result to a file");
  mini->callback([&] {
    action = [&] {
      Polyhedron poly = read_poly(file);
      if (!is_satisfiable(poly)) {
        write_poly(Polyhedron::empty(poly.vars()), output, out);
      } else {
        write_poly(Polyhedron(poly.vars(), minimize_system(poly.system())), output, out);
      }
      return kYes;
    };
  });

  auto* eq = app.add_subcommand("equal", "Compare two polyhedra as point sets");
  eq->add_option("FILE1", file)->required();
  eq->add_option("FILE2", file2)->required();
  eq->callback([&] {
    action = [&] {
      bool yes = set_equal(read_poly(file), read_poly(file2));
      out << (yes ? "equal" : "different") << '\n';
      return yes ? kYes : kNo;
    };
  });

  auto* cross = app.add_subcommand("crosspoly", "Cross-polytope benchmark pair and its hull");
  cross->add_option("-n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  cross->add_option("--emit", emit, "What to print")
      ->check(CLI::IsMember({"p1", "p2", "hull"}));
  cross->add_option("-o,--output", output, "Write the result to a file");
  cross->add_flag("--raw", raw, "Skip the final minimization");
  cross->callback([&] {
    action = [&] {
      auto [p1, p2] = cross_polytope_pair(n);
      if (emit == "p1") {
        write_poly(p1, output, out);
      } else if (emit == "p2") {
        write_poly(p2, output, out);
      } else {
        Polyhedron h = convex_hull_closure(p1, p2, ProjectionOptions{!raw});
        write_poly(h, output, out);
        err << "facets: " << h.system().size() << '\n';
      }
      return kYes;
    };
  });

  auto* bench = app.add_subcommand("bench", "Time hulls of random bounded operand pairs");
  bench->add_option("-n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  bench->add_option("--pairs", pairs, "Number of operand pairs")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "First seed");
  bench->callback([&] {
    action = [&] {
      auto start = std::chrono::steady_clock::now();
      std::size_t rows = 0;
      for (std::size_t i = 0; i < pairs; ++i) {
        Polyhedron p1 = random_polyhedron(n, n + 2, seed + 2 * i, true);
        Polyhedron p2 = random_polyhedron(n, n + 2, seed + 2 * i + 1, true);
        rows += convex_hull_closure(p1, p2).system().size();
      }
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      out << "pairs: " << pairs << '\n'
          << "hull constraints: " << rows << '\n'
          << "seconds: " << elapsed.count() << '\n';
      return kYes;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace polyhull
