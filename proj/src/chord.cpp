#include "curvecover/chord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curvecover/error.hpp"
#include "curvecover/golden.hpp"

namespace curvecover {
namespace {

constexpr double kRefineTol = 1e-10;

void require_unit_length(const ClosedCurve& curve) {
  if (!curve.is_unit_length()) {
    throw Error(ErrorCode::NotNormalized,
                "curve length " + std::to_string(curve.length()) + " is not 1");
  }
}

// Integral of sqrt(u^2 + c^2) over [0, u], u >= 0.
double half_hyperbola_area(double u, double c) {
  const double q = std::hypot(u, c);
  const double log_term = c > 0.0 ? c * c * std::asinh(u / c) : 0.0;
  return 0.5 * (u * q + log_term);
}

}  // namespace

std::vector<double> chord_breakpoints(const ClosedCurve& curve, double s) {
  const std::size_t n = curve.size();
  std::vector<double> points;
  points.reserve(2 * n + 1);
  points.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = curve.vertex_parameter(i);
    points.push_back(u);
    points.push_back(wrap_unit(u - s));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double integrate_affine_norm(std::span<const double> a, std::span<const double> b, double x0,
                             double x1) {
  const double width = x1 - x0;
  if (!(width > 0.0)) return 0.0;

  double bb = 0.0;
  double ab = 0.0;
  double mid_sq = 0.0;
  const double xm = 0.5 * (x0 + x1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bb += b[i] * b[i];
    ab += a[i] * b[i];
    const double w = a[i] + b[i] * xm;
    mid_sq += w * w;
  }
  const double slope = std::sqrt(bb);
  const double mid_norm = std::sqrt(mid_sq);
  // Nearly constant integrand: the midpoint value is exact to O((slope*width/|w|)^2).
  if (slope * width <= 1e-8 * mid_norm || bb == 0.0) return mid_norm * width;

  // |a + b x| = slope * sqrt((x - apex)^2 + c^2).
  const double apex = -ab / bb;
  double perp_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = a[i] + b[i] * apex;
    perp_sq += w * w;
  }
  const double c = std::sqrt(perp_sq) / slope;
  double u0 = x0 - apex;
  double u1 = x1 - apex;

  if (u0 < 0.0 && u1 > 0.0) {
    return slope * (half_hyperbola_area(u1, c) + half_hyperbola_area(-u0, c));
  }
  if (u1 <= 0.0) {
    const double t = u0;
    u0 = -u1;
    u1 = -t;
  }
  // Both ends on the same side of the apex; difference of antiderivatives
  // rewritten so that only `width` carries the small quantity.
  const double q0 = std::hypot(u0, c);
  const double q1 = std::hypot(u1, c);
  const double sum = u0 + u1;
  double value = width * q1 + u0 * width * sum / (q0 + q1);
  const double denom = u1 * q0 + u0 * q1;
  if (c > 0.0 && denom > 0.0) value += c * c * std::asinh(width * sum / denom);
  return slope * 0.5 * value;
}

double average_chord(const ClosedCurve& curve, double s, const QuadratureConfig& cfg) {
  require_unit_length(curve);
  if (!(s >= 0.0 && s <= 0.5)) {
    throw Error(ErrorCode::OutOfRange, "shift s must lie in [0, 1/2]");
  }
  if (s == 0.0) return 0.0;
  if (cfg.mode == QuadratureMode::Sampled && cfg.samples_per_breakpoint < 1) {
    throw Error(ErrorCode::OutOfRange, "samples_per_breakpoint must be positive");
  }

  auto cuts = chord_breakpoints(curve, s);
  cuts.push_back(1.0);

  const std::size_t dim = curve.dim();
  std::vector<double> a(dim);
  std::vector<double> b(dim);
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double lo = cuts[j];
    const double hi = cuts[j + 1];
    if (!(hi > lo)) continue;

    if (cfg.mode == QuadratureMode::Sampled) {
      const int m = cfg.samples_per_breakpoint;
      const double h = (hi - lo) / m;
      for (int i = 0; i < m; ++i) total += chord_length(curve, lo + (i + 0.5) * h, s) * h;
      continue;
    }

    const double mid = 0.5 * (lo + hi);
    const auto from = curve.locate(mid);
    const auto to = curve.locate(mid + s);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      a[axis] = curve.coordinate(to, axis) - curve.coordinate(from, axis);
      b[axis] = curve.velocity(to.edge, axis) - curve.velocity(from.edge, axis);
    }
    total += integrate_affine_norm(a, b, lo - mid, hi - mid);
  }
  return total;
}

ChordMinimum min_chord_start(const ClosedCurve& curve, double s, int grid_size) {
  require_unit_length(curve);
  if (!(s > 0.0 && s <= 0.5)) throw Error(ErrorCode::OutOfRange, "shift s must lie in (0, 1/2]");
  if (grid_size < 2) throw Error(ErrorCode::OutOfRange, "grid_size must be at least 2");

  auto samples = chord_breakpoints(curve, s);
  samples.reserve(samples.size() + static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) samples.push_back(static_cast<double>(j) / grid_size);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  auto chord = [&](double t) { return chord_length(curve, t, s); };
  const auto best = minimize_over_cells(chord, samples, 1.0, kRefineTol);
  return {best.x, best.value};
}

}  // namespace curvecover
