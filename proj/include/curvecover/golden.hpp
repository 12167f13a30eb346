#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace curvecover {

struct ScalarMinimum {
  double x;
  double value;
};

// Golden-section search for the minimum of a unimodal f on [lo, hi]. Stops
// once the bracket is narrower than tol; the result is the best point seen,
// endpoints included, with the smaller x winning exact ties.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  ScalarMinimum best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v < best.value || (v == best.value && x < best.x)) best = {x, v};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  // 200 iterations shrink any double-precision bracket below tol.
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  const double mid = 0.5 * (a + b);
  consider(mid, f(mid));
  return best;
}

// Minimizes a period-periodic f given sorted sample points in [0, period) such
// that f is unimodal between consecutive samples. The best sample (smallest
// x among values within tie_tol) seeds golden-section refinement of the two
// cells beside it. The returned x is reduced to [0, period).
template <typename F>
ScalarMinimum minimize_over_cells(F&& f, const std::vector<double>& samples, double period,
                                  double tol, double tie_tol = 1e-14) {
  const std::size_t m = samples.size();
  std::size_t best_i = 0;
  double best_v = f(samples[0]);
  for (std::size_t i = 1; i < m; ++i) {
    const double v = f(samples[i]);
    if (v < best_v - tie_tol) {
      best_v = v;
      best_i = i;
    }
  }
  ScalarMinimum best{samples[best_i], best_v};

  const double x = samples[best_i];
  const double prev = best_i == 0 ? samples[m - 1] - period : samples[best_i - 1];
  const double next = best_i + 1 == m ? samples[0] + period : samples[best_i + 1];
  for (auto [lo, hi] : {std::pair{prev, x}, std::pair{x, next}}) {
    if (!(hi > lo)) continue;
    const auto cell = golden_section_minimize(f, lo, hi, tol);
    if (cell.value < best.value - tie_tol) {
      double wrapped = cell.x - period * std::floor(cell.x / period);
      if (wrapped >= period) wrapped = 0.0;
      best = {wrapped, cell.value};
    }
  }
  return best;
}

}  // namespace curvecover
