#include "isoperim/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace isoperim::lp {

namespace {

constexpr double kFeasEps = 1e-12;

struct Reduced {
  std::vector<Constraint> cons;
  std::array<double, 3> c{0, 0, 0};
};

// Recursive Seidel step. Constraints use the first `dim` coordinates; the
// shuffle order comes from the caller-owned generator so the whole solve is
// deterministic.
bool solve_rec(std::vector<Constraint> cons, std::array<double, 3> c, int dim,
               std::mt19937& rng, std::array<double, 3>& x) {
  if (dim == 1) {
    double lo = -kBigBound, hi = kBigBound;
    for (const Constraint& cn : cons) {
      const double a = cn.a[0];
      if (std::abs(a) <= kFeasEps) {
        if (cn.b < -kFeasEps * std::max(1.0, std::abs(cn.b))) return false;
        continue;
      }
      if (a > 0) {
        hi = std::min(hi, cn.b / a);
      } else {
        lo = std::max(lo, cn.b / a);
      }
    }
    if (lo > hi + kFeasEps * std::max(1.0, std::abs(hi))) return false;
    x[0] = c[0] > 0 ? hi : (c[0] < 0 ? lo : std::clamp(0.0, lo, hi));
    return true;
  }

  std::shuffle(cons.begin(), cons.end(), rng);
  for (int i = 0; i < dim; ++i) x[i] = c[i] >= 0 ? kBigBound : -kBigBound;

  for (size_t j = 0; j < cons.size(); ++j) {
    const Constraint& cj = cons[j];
    double lhs = 0;
    for (int i = 0; i < dim; ++i) lhs += cj.a[i] * x[i];
    const double tol = kFeasEps * std::max({1.0, std::abs(cj.b), std::abs(lhs)});
    if (lhs <= cj.b + tol) continue;

    // optimum lies on the hyperplane of constraint j: eliminate the variable
    // with the largest coefficient
    int k = 0;
    for (int i = 1; i < dim; ++i) {
      if (std::abs(cj.a[i]) > std::abs(cj.a[k])) k = i;
    }
    if (std::abs(cj.a[k]) <= kFeasEps) return false;  // 0 <= b violated

    auto reduce = [&](const std::array<double, 3>& a, double b,
                      Constraint& out) {
      int idx = 0;
      for (int i = 0; i < dim; ++i) {
        if (i == k) continue;
        out.a[idx++] = a[i] - a[k] * cj.a[i] / cj.a[k];
      }
      out.b = b - a[k] * cj.b / cj.a[k];
    };

    Reduced red;
    red.cons.reserve(j + 2);
    for (size_t t = 0; t < j; ++t) {
      Constraint rc;
      reduce(cons[t].a, cons[t].b, rc);
      red.cons.push_back(rc);
    }
    {
      // keep the eliminated variable inside the artificial box
      std::array<double, 3> pos{0, 0, 0}, neg{0, 0, 0};
      pos[k] = 1;
      neg[k] = -1;
      Constraint rc;
      reduce(pos, kBigBound, rc);
      red.cons.push_back(rc);
      reduce(neg, kBigBound, rc);
      red.cons.push_back(rc);
    }
    {
      int idx = 0;
      for (int i = 0; i < dim; ++i) {
        if (i == k) continue;
        red.c[idx++] = c[i] - c[k] * cj.a[i] / cj.a[k];
      }
    }

    std::array<double, 3> xr{0, 0, 0};
    if (!solve_rec(std::move(red.cons), red.c, dim - 1, rng, xr)) return false;

    double back = cj.b;
    int idx = 0;
    for (int i = 0; i < dim; ++i) {
      if (i == k) continue;
      x[i] = xr[idx++];
      back -= cj.a[i] * x[i];
    }
    x[k] = back / cj.a[k];
  }
  return true;
}

}  // namespace

Result maximize(const std::vector<Constraint>& cons_in,
                const std::array<double, 3>& objective, int dim) {
  // normalize rows so the feasibility epsilon is scale-free
  std::vector<Constraint> cons;
  cons.reserve(cons_in.size());
  for (const Constraint& cn : cons_in) {
    double m = 0;
    for (int i = 0; i < dim; ++i) m = std::max(m, std::abs(cn.a[i]));
    if (m <= kFeasEps) {
      if (cn.b < -kFeasEps) return Result{Status::infeasible, {0, 0, 0}, 0};
      continue;
    }
    Constraint c2 = cn;
    for (int i = 0; i < dim; ++i) c2.a[i] /= m;
    c2.b /= m;
    cons.push_back(c2);
  }

  std::mt19937 rng(0x5eed1234u + static_cast<unsigned>(cons.size()));
  Result res;
  std::array<double, 3> x{0, 0, 0};
  if (!solve_rec(cons, objective, dim, rng, x)) {
    res.status = Status::infeasible;
    return res;
  }
  res.x = x;
  res.value = 0;
  for (int i = 0; i < dim; ++i) res.value += objective[i] * x[i];

  if (std::abs(res.value) >= 1e-3 * kBigBound) {
    res.status = Status::unbounded;
  } else {
    bool at_box = false;
    for (int i = 0; i < dim; ++i) {
      if (std::abs(x[i]) >= 0.999 * kBigBound) at_box = true;
    }
    res.status = at_box ? Status::value_bounded_free_center : Status::optimal;
  }
  return res;
}

}  // namespace isoperim::lp
