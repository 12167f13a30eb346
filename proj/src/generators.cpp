#include "curvecover/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "curvecover/error.hpp"

namespace curvecover {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void bad_spec(const std::string& why) { throw Error(ErrorCode::BadSpec, why); }

void validate(const CurveSpec& spec) {
  if (spec.dim < 2) bad_spec("dim must be at least 2");
  if (spec.dim < intrinsic_dim(spec)) bad_spec("dim below the curve's intrinsic dimension");
  switch (spec.kind) {
    case CurveKind::Circle:
    case CurveKind::Lissajous3d:
      if (spec.resolution < 3) bad_spec("resolution must be at least 3");
      break;
    case CurveKind::Ellipse:
      if (spec.resolution < 3) bad_spec("resolution must be at least 3");
      if (!(spec.semi_a > 0.0 && spec.semi_b > 0.0)) bad_spec("ellipse semi-axes must be positive");
      break;
    case CurveKind::Rectangle:
      if (!(spec.aspect > 0.0 && std::isfinite(spec.aspect))) bad_spec("aspect must be positive");
      break;
    case CurveKind::RegularPolygon:
      if (spec.sides < 3) bad_spec("a polygon needs at least 3 sides");
      break;
    case CurveKind::RandomClosed:
      if (spec.count < 4) bad_spec("random closed polylines need at least 4 vertices");
      break;
  }
}

Point planar(double x, double y) { return Point{{x, y}}; }

std::vector<Point> sample_smooth(int resolution, auto&& param) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) out.push_back(param(kTwoPi * j / resolution));
  return out;
}

std::vector<Point> raw_vertices(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::Circle:
      return sample_smooth(spec.resolution,
                           [](double th) { return planar(std::cos(th), std::sin(th)); });
    case CurveKind::Ellipse:
      return sample_smooth(spec.resolution, [&](double th) {
        return planar(spec.semi_a * std::cos(th), spec.semi_b * std::sin(th));
      });
    case CurveKind::Rectangle:
      return {planar(0, 0), planar(spec.aspect, 0), planar(spec.aspect, 1), planar(0, 1)};
    case CurveKind::RegularPolygon: {
      // Bottom edge horizontal, vertex 0 at the origin, counter-clockwise.
      const int m = spec.sides;
      const double phase = -std::numbers::pi / 2 - std::numbers::pi / m;
      std::vector<Point> out;
      for (int j = 0; j < m; ++j) {
        const double th = phase + kTwoPi * j / m;
        out.push_back(planar(std::cos(th) - std::cos(phase), std::sin(th) - std::sin(phase)));
      }
      return out;
    }
    case CurveKind::RandomClosed: {
      std::mt19937_64 rng(spec.seed);
      std::vector<Point> out;
      for (int i = 0; i < spec.count; ++i) {
        Point p;
        p.coords.resize(static_cast<std::size_t>(spec.dim));
        for (double& c : p.coords) c = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (!out.empty() && p.coords == out.back().coords) {
          bad_spec("random stream produced coincident consecutive vertices");
        }
        out.push_back(std::move(p));
      }
      if (out.back().coords == out.front().coords) {
        bad_spec("random stream produced coincident consecutive vertices");
      }
      return out;
    }
    case CurveKind::Lissajous3d:
      return sample_smooth(spec.resolution, [&](double th) {
        return Point{{std::cos(th), std::sin(spec.freq_p * th), std::sin(spec.freq_q * th)}};
      });
  }
  return {};
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Circle: return "circle";
    case CurveKind::Ellipse: return "ellipse";
    case CurveKind::Rectangle: return "rectangle";
    case CurveKind::RegularPolygon: return "regular_polygon";
    case CurveKind::RandomClosed: return "random_closed";
    case CurveKind::Lissajous3d: return "lissajous3d";
  }
  return "circle";
}

std::optional<CurveKind> parse_curve_kind(std::string_view name) {
  for (auto kind : {CurveKind::Circle, CurveKind::Ellipse, CurveKind::Rectangle,
                    CurveKind::RegularPolygon, CurveKind::RandomClosed, CurveKind::Lissajous3d}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

int intrinsic_dim(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::Lissajous3d: return 3;
    case CurveKind::RandomClosed: return spec.dim;
    default: return 2;
  }
}

ClosedCurve generate(const CurveSpec& spec) {
  validate(spec);
  auto vertices = raw_vertices(spec);
  for (auto& v : vertices) v.coords.resize(static_cast<std::size_t>(spec.dim), 0.0);
  return build_curve(vertices, spec.normalize);
}

}  // namespace curvecover
