#include "curvecover/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curvecover/error.hpp"

namespace curvecover {
namespace {

constexpr double kMergeDistance = 1e-12;

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<double> cumulative_lengths(const std::vector<double>& coords, std::size_t dim) {
  const std::size_t n = coords.size() / dim;
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    std::span<const double> a{coords.data() + i * dim, dim};
    std::span<const double> b{coords.data() + j * dim, dim};
    cum[i + 1] = cum[i] + distance(a, b);
  }
  return cum;
}

}  // namespace

double wrap_unit(double t) noexcept {
  const double r = t - std::floor(t);
  return r >= 1.0 ? 0.0 : r;
}

ClosedCurve::ClosedCurve(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim) {
  cum_lengths_ = cumulative_lengths(coords_, dim_);
}

Point ClosedCurve::vertex_point(std::size_t i) const {
  auto v = vertex(i);
  return Point{{v.begin(), v.end()}};
}

std::vector<Point> ClosedCurve::vertices() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(vertex_point(i));
  return out;
}

EdgeLocation ClosedCurve::locate(double t) const {
  const std::size_t n = size();
  const double pos = wrap_unit(t) * length();
  auto it = std::upper_bound(cum_lengths_.begin(), cum_lengths_.end(), pos);
  std::size_t e = static_cast<std::size_t>(std::distance(cum_lengths_.begin(), it));
  e = e == 0 ? 0 : e - 1;
  if (e >= n) e = n - 1;
  const double frac = (pos - cum_lengths_[e]) / edge_length(e);
  return {e, std::clamp(frac, 0.0, 1.0)};
}

double ClosedCurve::coordinate(const EdgeLocation& loc, std::size_t axis) const {
  const std::size_t next = (loc.edge + 1) % size();
  const double a = coords_[loc.edge * dim_ + axis];
  const double b = coords_[next * dim_ + axis];
  return a + loc.fraction * (b - a);
}

double ClosedCurve::velocity(std::size_t e, std::size_t axis) const {
  const std::size_t next = (e + 1) % size();
  const double delta = coords_[next * dim_ + axis] - coords_[e * dim_ + axis];
  return delta / edge_length(e) * length();
}

bool ClosedCurve::is_unit_length(double tol) const { return std::abs(length() - 1.0) <= tol; }

ClosedCurve build_curve(std::span<const Point> vertices, bool normalize) {
  if (vertices.empty()) throw Error(ErrorCode::DegenerateCurve, "no vertices");
  const std::size_t dim = vertices.front().dim();
  if (dim < 2) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 2");

  std::vector<std::span<const double>> kept;
  kept.reserve(vertices.size());
  for (const auto& p : vertices) {
    if (p.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vertex of dimension " + std::to_string(p.dim()) + " in a curve of dimension " +
                      std::to_string(dim));
    }
    for (double c : p.coords) {
      if (!std::isfinite(c)) throw Error(ErrorCode::DegenerateCurve, "non-finite coordinate");
    }
    if (!kept.empty() && distance(kept.back(), p.coords) < kMergeDistance) continue;
    kept.emplace_back(p.coords);
  }
  // Closing edge is implicit; drop a repeated first vertex at the end.
  while (kept.size() > 1 && distance(kept.back(), kept.front()) < kMergeDistance) kept.pop_back();

  if (kept.size() < 3) {
    throw Error(ErrorCode::DegenerateCurve,
                "need at least 3 distinct vertices, got " + std::to_string(kept.size()));
  }

  std::vector<double> coords;
  coords.reserve(kept.size() * dim);
  for (auto v : kept) coords.insert(coords.end(), v.begin(), v.end());

  if (normalize) {
    const double total = cumulative_lengths(coords, dim).back();
    if (!(total > 0.0)) throw Error(ErrorCode::DegenerateCurve, "zero total length");
    for (double& c : coords) c /= total;
  }
  ClosedCurve curve(std::move(coords), dim);
  if (!(curve.length() > 0.0)) throw Error(ErrorCode::DegenerateCurve, "zero total length");
  return curve;
}

Point point_at(const ClosedCurve& curve, double t) {
  const auto loc = curve.locate(t);
  Point p;
  p.coords.resize(curve.dim());
  for (std::size_t a = 0; a < curve.dim(); ++a) p.coords[a] = curve.coordinate(loc, a);
  return p;
}

double chord_length(const ClosedCurve& curve, double t, double s) {
  const auto from = curve.locate(t);
  const auto to = curve.locate(wrap_unit(t) + wrap_unit(s));
  double sum = 0.0;
  for (std::size_t a = 0; a < curve.dim(); ++a) {
    const double d = curve.coordinate(to, a) - curve.coordinate(from, a);
    sum += d * d;
  }
  return std::sqrt(sum);
}

double cover_piece_length(const ClosedCurve& curve, const Arc& arc) {
  const double arc_length = arc.length_frac * curve.length();
  if (arc.length_frac >= 1.0) return arc_length;
  return arc_length + chord_length(curve, arc.t_start, arc.length_frac);
}

void validate_arc(const Arc& arc) {
  if (!(arc.t_start >= 0.0 && arc.t_start < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "arc start must lie in [0, 1)");
  }
  if (!(arc.length_frac > 0.0 && arc.length_frac <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "arc length fraction must lie in (0, 1]");
  }
}

}  // namespace curvecover
