#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "curvecover/curve.hpp"

namespace curvecover {

enum class CurveKind { Circle, Ellipse, Rectangle, RegularPolygon, RandomClosed, Lissajous3d };

std::string_view to_string(CurveKind kind);
std::optional<CurveKind> parse_curve_kind(std::string_view name);

struct CurveSpec {
  CurveKind kind = CurveKind::Circle;
  // ellipse semi-axes
  double semi_a = 2.0;
  double semi_b = 1.0;
  // rectangle side ratio (long side / short side)
  double aspect = 1.0;
  // regular polygon side count
  int sides = 4;
  // random closed polyline vertex count and seed
  int count = 64;
  std::uint64_t seed = 1;
  // lissajous frequencies for the y and z coordinates
  int freq_p = 2;
  int freq_q = 3;
  // vertex count for the smooth kinds
  int resolution = 4096;
  int dim = 2;
  bool normalize = true;
};

// Deterministic in the CurveSpec: random_closed draws coordinates from std::mt19937_64
// seeded with spec.seed, mapped to [0, 1) by taking the top 53 bits.
ClosedCurve generate(const CurveSpec& spec);

// Intrinsic embedding dimension of a kind (3 for lissajous, 2 otherwise,
// spec.dim for random closed polylines).
int intrinsic_dim(const CurveSpec& spec);

}  // namespace curvecover
