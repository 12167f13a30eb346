#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace curvecover {

struct Point {
  std::vector<double> coords;

  std::size_t dim() const noexcept { return coords.size(); }
};

// A connected piece of a closed curve, in normalized parameters: it starts at
// t_start and covers length_frac of the total length in traversal order.
struct Arc {
  double t_start = 0.0;
  double length_frac = 1.0;
};

// Position on a polyline: edge index plus fraction in [0, 1] along that edge.
struct EdgeLocation {
  std::size_t edge = 0;
  double fraction = 0.0;
};

// Closed polyline in R^d, parameterized by arc length normalized to [0, 1).
// The closing edge from the last vertex back to vertex 0 is implicit.
// Immutable once built; use build_curve() to construct one.
class ClosedCurve {
public:
  std::size_t size() const noexcept { return cum_lengths_.size() - 1; }
  std::size_t dim() const noexcept { return dim_; }
  double length() const noexcept { return cum_lengths_.back(); }

  std::span<const double> vertex(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  Point vertex_point(std::size_t i) const;
  std::vector<Point> vertices() const;

  // n + 1 entries; entry i is the perimeter distance from vertex 0 to vertex i.
  std::span<const double> cum_lengths() const noexcept { return cum_lengths_; }
  double edge_length(std::size_t e) const { return cum_lengths_[e + 1] - cum_lengths_[e]; }

  // Normalized parameter of vertex i, i.e. cum_lengths[i] / L.
  double vertex_parameter(std::size_t i) const { return cum_lengths_[i] / length(); }

  EdgeLocation locate(double t) const;
  double coordinate(const EdgeLocation& loc, std::size_t axis) const;
  // Component of dr/dt along `axis` on edge e (r is parameterized over [0, 1)).
  double velocity(std::size_t e, std::size_t axis) const;

  bool is_unit_length(double tol = 1e-9) const;

private:
  friend ClosedCurve build_curve(std::span<const Point> vertices, bool normalize);

  ClosedCurve(std::vector<double> coords, std::size_t dim);

  std::vector<double> coords_;
  std::size_t dim_ = 0;
  std::vector<double> cum_lengths_;
};

// Reduces t to [0, 1).
double wrap_unit(double t) noexcept;

// Validates and builds a closed curve. Exact and near (< 1e-12) consecutive
// duplicates are merged, as is a trailing copy of the first vertex. With
// normalize set, coordinates are scaled by 1/L so the result has unit length.
ClosedCurve build_curve(std::span<const Point> vertices, bool normalize);

Point point_at(const ClosedCurve& curve, double t);

// Euclidean distance between r(t) and r(t + s).
double chord_length(const ClosedCurve& curve, double t, double s);

// Length of the closed curve formed by the arc plus the chord joining its ends.
double cover_piece_length(const ClosedCurve& curve, const Arc& arc);

void validate_arc(const Arc& arc);

}  // namespace curvecover
