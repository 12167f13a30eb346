#pragma once

// Test-only corpus and brute-force oracles. The oracles use nothing but
// chord_length, so they stay independent of the piecewise machinery they check.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "curvecover/curve.hpp"
#include "curvecover/generators.hpp"

namespace curvecover::testing {

inline constexpr double kPi = std::numbers::pi;

inline double circle_chord(double s) { return std::sin(kPi * s) / kPi; }

struct NamedCurve {
  std::string name;
  ClosedCurve curve;
};

inline ClosedCurve make(CurveKind kind, auto&& tweak) {
  CurveSpec spec;
  spec.kind = kind;
  tweak(spec);
  return generate(spec);
}

inline ClosedCurve unit_circle(int resolution = 4096) {
  return make(CurveKind::Circle, [&](CurveSpec& s) { s.resolution = resolution; });
}

inline ClosedCurve unit_square() {
  return make(CurveKind::RegularPolygon, [](CurveSpec& s) { s.sides = 4; });
}

inline ClosedCurve ellipse_2_1() {
  return make(CurveKind::Ellipse, [](CurveSpec& s) {
    s.semi_a = 2.0;
    s.semi_b = 1.0;
  });
}

inline ClosedCurve rectangle(double aspect) {
  return make(CurveKind::Rectangle, [&](CurveSpec& s) { s.aspect = aspect; });
}

inline ClosedCurve random_closed(int dim, std::uint64_t seed, int count = 64) {
  return make(CurveKind::RandomClosed, [&](CurveSpec& s) {
    s.dim = dim;
    s.seed = seed;
    s.count = count;
  });
}

inline ClosedCurve lissajous() {
  return make(CurveKind::Lissajous3d, [](CurveSpec& s) { s.dim = 3; });
}

// circle, 2:1 ellipse, square, aspect-10 rectangle, seeded random closed
// polylines in d = 2, 3, 5 and a lissajous space curve; all unit length.
inline std::vector<NamedCurve> corpus() {
  std::vector<NamedCurve> out;
  out.push_back({"circle", unit_circle()});
  out.push_back({"ellipse_2_1", ellipse_2_1()});
  out.push_back({"square", unit_square()});
  out.push_back({"rectangle_10", rectangle(10.0)});
  out.push_back({"random_d2", random_closed(2, 11)});
  out.push_back({"random_d3", random_closed(3, 12)});
  out.push_back({"random_d5", random_closed(5, 13)});
  out.push_back({"lissajous3d", lissajous()});
  return out;
}

// Composite midpoint rule on a uniform grid of n starts.
inline double brute_average_chord(const ClosedCurve& curve, double s, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += chord_length(curve, (i + 0.5) / n, s);
  return sum / n;
}

struct BruteMin {
  double t;
  double chord;
};

inline BruteMin brute_min_chord(const ClosedCurve& curve, double s, int n) {
  BruteMin best{0.0, chord_length(curve, 0.0, s)};
  for (int i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double c = chord_length(curve, t, s);
    if (c < best.chord) best = {t, c};
  }
  return best;
}

}  // namespace curvecover::testing
