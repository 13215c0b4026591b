#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyhull/model.hpp"

namespace polyhull {

/// Which dimensions survive a projection and the order the others are
/// eliminated in.
struct EliminationPlan {
  std::vector<std::size_t> keep;
  std::vector<std::size_t> order;
};

struct ProjectionOptions {
  /// Run LP-based minimization on the result. Without it the output is the
  /// raw elimination result after syntactic cleanup.
  bool minimize = true;
};

/// Removes dimension `dim` from the system; the result keeps the same
/// dimension count with a zero column at `dim`.
///
/// An equality touching `dim` is substituted into every other row (Gaussian
/// step). Otherwise every inequality with a positive coefficient is combined
/// with every one with a negative coefficient (Fourier-Motzkin step).
/// Trivially true rows and duplicates are dropped; a trivially false row
/// yields Empty.
ConstraintSystem eliminate_one(const ConstraintSystem& system, std::size_t dim);

/// The greedy order projection uses: equality pivots first, then the
/// Fourier-Motzkin candidate with the smallest pos*neg - pos - neg estimate,
/// ties to the lowest index. Computed by running the eliminations.
EliminationPlan choose_order(const ConstraintSystem& system,
                             std::span<const std::size_t> keep);

/// Eliminates `order` one dimension at a time, exactly in that order.
ConstraintSystem eliminate_in_order(const ConstraintSystem& system,
                                    std::span<const std::size_t> order);

/// Projection onto `keep`: the result is a system over keep.size()
/// dimensions whose i-th dimension is keep[i]. Unsatisfiable input yields
/// Empty. Throws DimensionError for out-of-range or repeated indices.
ConstraintSystem project_system(const ConstraintSystem& system,
                                std::span<const std::size_t> keep,
                                ProjectionOptions options = {});

/// Projection onto the named variables, in the order given. Throws
/// UnknownVariable or DuplicateVariable.
Polyhedron project(const Polyhedron& poly, std::span<const std::string> onto,
                   ProjectionOptions options = {});

/// Removes exact duplicates and merges rows with proportional coefficients:
/// parallel bounds keep the tightest, opposite bounds that meet become an
/// equality, and bounds that cross make the system Empty. Output is sorted.
ConstraintSystem tidy(const ConstraintSystem& system);

}  // namespace polyhull
