#pragma once

#include <span>
#include <vector>

#include "curvecover/curve.hpp"

namespace curvecover {

enum class QuadratureMode { ExactPiecewise, Sampled };

struct QuadratureConfig {
  QuadratureMode mode = QuadratureMode::ExactPiecewise;
  int samples_per_breakpoint = 64;
};

// Sorted, duplicate-free parameters in [0, 1) where r(t) or r(t + s) sits on a
// vertex. Between consecutive entries the chord vector r(t + s) - r(t) is
// affine in t.
std::vector<double> chord_breakpoints(const ClosedCurve& curve, double s);

// Exact value of the integral of |a + b x| over [x0, x1], evaluated without
// subtractive cancellation.
double integrate_affine_norm(std::span<const double> a, std::span<const double> b, double x0,
                             double x1);

// Mean chord length over all starting points: the integral over t in [0, 1) of
// |r(t + s) - r(t)|. Requires a unit-length curve and s in [0, 1/2].
double average_chord(const ClosedCurve& curve, double s, const QuadratureConfig& cfg = {});

struct ChordMinimum {
  double t_star;
  double chord;
};

// Start parameter of a length-s arc with the shortest chord. The grid
// {j / grid_size} plus every vertex-crossing parameter is scanned, then the
// cells beside the best sample are refined by golden-section search to 1e-10.
ChordMinimum min_chord_start(const ClosedCurve& curve, double s, int grid_size = 4096);

}  // namespace curvecover
