#include <doctest.h>

#include <cmath>
#include <random>

#include "curvecover/chord.hpp"
#include "curvecover/error.hpp"
#include "support.hpp"

using namespace curvecover;
using namespace curvecover::testing;
using doctest::Approx;

namespace {

const double kSquareHalfShift = (std::sqrt(2.0) + std::log(1.0 + std::sqrt(2.0))) / 8.0;

double riemann_affine_norm(const std::vector<double>& a, const std::vector<double>& b, double x0,
                           double x1, int n) {
  double sum = 0.0;
  const double h = (x1 - x0) / n;
  for (int i = 0; i < n; ++i) {
    const double x = x0 + (i + 0.5) * h;
    double q = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) q += (a[k] + b[k] * x) * (a[k] + b[k] * x);
    sum += std::sqrt(q) * h;
  }
  return sum;
}

}  // namespace

TEST_CASE("integrate_affine_norm matches a fine Riemann sum") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    std::vector<double> a(dim);
    std::vector<double> b(dim);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = 2.0 * u(rng);
    const double x0 = u(rng);
    const double x1 = x0 + 0.5 * (u(rng) + 1.0) + 1e-3;
    const double exact = integrate_affine_norm(a, b, x0, x1);
    CHECK(exact == Approx(riemann_affine_norm(a, b, x0, x1, 200000)).epsilon(1e-8));
  }
}

TEST_CASE("integrate_affine_norm edge cases") {
  const std::vector<double> a{0.0, 0.0};
  const std::vector<double> b{1.0, 0.0};
  // |x| over [-1, 2]
  CHECK(integrate_affine_norm(a, b, -1.0, 2.0) == Approx(2.5).epsilon(1e-14));
  // constant vector
  CHECK(integrate_affine_norm(std::vector<double>{3.0, 4.0}, std::vector<double>{0.0, 0.0}, 0.0,
                              2.0) == Approx(10.0).epsilon(1e-14));
  // empty interval
  CHECK(integrate_affine_norm(b, b, 1.0, 1.0) == 0.0);
  // nearly parallel edges far from the apex
  const double tiny = integrate_affine_norm(std::vector<double>{1.0, 0.0},
                                            std::vector<double>{1e-7, 1e-9}, 0.0, 1e-3);
  CHECK(tiny == Approx(1e-3 * (1.0 + 0.5e-10)).epsilon(1e-13));
}

TEST_CASE("average_chord examples") {
  const auto circle = unit_circle();
  CHECK(std::abs(average_chord(circle, 0.25) - circle_chord(0.25)) < 1e-5);
  CHECK(std::abs(circle_chord(0.25) - 0.225079) < 1e-6);

  const auto square = unit_square();
  CHECK(average_chord(square, 0.0) == 0.0);
  CHECK(std::abs(average_chord(square, 0.5) - kSquareHalfShift) < 1e-9);
  CHECK(std::abs(kSquareHalfShift - 0.286949) < 1e-6);
  // Four pieces only, so the midpoint rule needs many samples per piece.
  CHECK(std::abs(average_chord(square, 0.5, {QuadratureMode::Sampled, 1024}) - kSquareHalfShift) <
        1e-7);
}

TEST_CASE("average_chord agrees with the brute-force midpoint oracle") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (double s : {0.1, 0.37}) {
      CHECK(std::abs(average_chord(curve, s) - brute_average_chord(curve, s, 400000)) < 1e-6);
    }
  }
}

TEST_CASE("average chord inequality holds on the corpus") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (double s : {0.05, 0.1, 0.25, 0.4, 0.5}) {
      CAPTURE(s);
      CHECK(average_chord(curve, s) <= circle_chord(s) + 1e-9);
    }
  }
}

TEST_CASE("regular n-gons approach circle equality") {
  double prev_gap = INFINITY;
  for (int n : {256, 1024, 4096}) {
    const double gap = std::abs(average_chord(unit_circle(n), 0.25) - circle_chord(0.25));
    CAPTURE(n);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-4);
}

TEST_CASE("non-circles are strictly below the bound") {
  CHECK(circle_chord(0.25) - average_chord(ellipse_2_1(), 0.25) > 1e-3);
  CHECK(circle_chord(0.25) - average_chord(unit_square(), 0.25) > 1e-3);
}

TEST_CASE("exact and sampled quadrature agree on densely sampled curves") {
  const QuadratureConfig sampled{QuadratureMode::Sampled, 64};
  for (const auto& [name, curve] : corpus()) {
    if (curve.size() < 64) continue;
    CAPTURE(name);
    for (double s : {0.05, 0.25, 0.5}) {
      CHECK(std::abs(average_chord(curve, s) - average_chord(curve, s, sampled)) < 1e-6);
    }
  }
}

TEST_CASE("sampled quadrature converges quadratically on coarse polygons") {
  for (const auto& curve : {unit_square(), rectangle(10.0)}) {
    for (double s : {0.25, 0.5}) {
      const double exact = average_chord(curve, s);
      const double e64 = std::abs(exact - average_chord(curve, s, {QuadratureMode::Sampled, 64}));
      const double e256 =
          std::abs(exact - average_chord(curve, s, {QuadratureMode::Sampled, 256}));
      CHECK(e64 < 1e-4);
      CHECK(e256 == doctest::Approx(e64 / 16).epsilon(0.05));
    }
  }
}

TEST_CASE("average_chord errors") {
  const auto raw = generate([] {
    CurveSpec spec;
    spec.kind = CurveKind::Circle;
    spec.normalize = false;
    return spec;
  }());
  CHECK_THROWS_AS(average_chord(raw, 0.25), Error);
  try {
    average_chord(raw, 0.25);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalized);
  }
  try {
    average_chord(unit_square(), 0.6);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("min_chord_start examples") {
  const auto circle = unit_circle();
  const auto c = min_chord_start(circle, 0.3);
  CHECK(std::abs(c.chord - circle_chord(0.3)) < 1e-6);
  CHECK(std::abs(circle_chord(0.3) - 0.257518) < 1e-6);

  const auto square = unit_square();
  const auto q = min_chord_start(square, 0.25);
  CHECK(q.t_star == Approx(0.125).epsilon(1e-9));
  CHECK(q.chord == Approx(std::hypot(0.125, 0.125)).epsilon(1e-12));
}

TEST_CASE("min_chord_start property: never above a sample or the mean") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (double s : {0.05, 0.2, 0.3417, 0.5}) {
      const auto best = min_chord_start(curve, s);
      CHECK(best.t_star >= 0.0);
      CHECK(best.t_star < 1.0);
      CHECK(best.chord == Approx(chord_length(curve, best.t_star, s)).epsilon(1e-12));
      CHECK(best.chord <= chord_length(curve, 0.0, s));
      CHECK(best.chord <= average_chord(curve, s) + 1e-8);
      CHECK(best.chord <= circle_chord(s) + 1e-8);
    }
  }
}

TEST_CASE("min_chord_start is invariant under rigid motions") {
  const auto curve = random_closed(3, 41, 50);
  // Rotate about z, then translate.
  const double th = 0.7;
  std::vector<Point> moved;
  for (const auto& v : curve.vertices()) {
    const double x = v.coords[0];
    const double y = v.coords[1];
    moved.push_back(Point{{std::cos(th) * x - std::sin(th) * y + 3.0,
                           std::sin(th) * x + std::cos(th) * y - 1.0, v.coords[2] + 0.5}});
  }
  const auto image = build_curve(moved, true);
  for (double s : {0.1, 0.3, 0.5}) {
    CHECK(min_chord_start(curve, s).chord ==
          Approx(min_chord_start(image, s).chord).epsilon(1e-9));
  }
}

TEST_CASE("min_chord_start errors") {
  CHECK_THROWS_AS(min_chord_start(unit_square(), 0.0), Error);
  CHECK_THROWS_AS(min_chord_start(unit_square(), 0.7), Error);
  CHECK_THROWS_AS(min_chord_start(unit_square(), 0.2, 1), Error);
}
