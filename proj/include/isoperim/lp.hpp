#pragma once

#include <array>
#include <vector>

namespace isoperim::lp {

// maximize c . x  subject to  a_j . x <= b_j, over x in R^d (d <= 3).
//
// Solved with Seidel's randomized incremental algorithm inside an artificial
// bounding box |x_i| <= kBigBound; an optimum pressing against that box is
// reported as unbounded in value (`unbounded`) or as an optimum whose
// position is not pinned down by the constraints (`value_bounded_free_center`,
// e.g. the Chebyshev-center LP of a stripe-like region). Deterministic: the
// shuffle seed is fixed.
inline constexpr double kBigBound = 1e9;

enum class Status { optimal, infeasible, unbounded, value_bounded_free_center };

struct Constraint {
  std::array<double, 3> a{0, 0, 0};
  double b = 0;
};

struct Result {
  Status status = Status::infeasible;
  std::array<double, 3> x{0, 0, 0};
  double value = 0;
};

Result maximize(const std::vector<Constraint>& cons,
                const std::array<double, 3>& objective, int dim);

}  // namespace isoperim::lp
