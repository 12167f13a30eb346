#include <doctest.h>

#include <cmath>

#include "curvecover/bounds.hpp"
#include "curvecover/chord.hpp"
#include "curvecover/error.hpp"
#include "curvecover/partition.hpp"
#include "support.hpp"

using namespace curvecover;
using namespace curvecover::testing;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadFlag;
}

// Smallest max-chord over an n-point shift grid in [0, 1/k).
double brute_best_gamma(const ClosedCurve& curve, int k, int n) {
  double best = INFINITY;
  for (int j = 0; j < n; ++j) {
    const double shift = static_cast<double>(j) / (static_cast<double>(k) * n);
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      worst = std::max(worst, chord_length(curve, shift + static_cast<double>(i) / k, 1.0 / k));
    }
    best = std::min(best, worst);
  }
  return 1.0 / k + best;
}

}  // namespace

TEST_CASE("uniform_partition examples") {
  const auto circle = unit_circle();
  const auto c4 = uniform_partition(circle, 4, 0.0);
  REQUIRE(c4.k() == 4);
  CHECK(c4.construction == Construction::Uniform);
  for (double len : c4.piece_lengths) CHECK(std::abs(len - (0.25 + circle_chord(0.25))) < 1e-6);

  const auto square = unit_square();
  const auto s4 = uniform_partition(square, 4, 0.0);
  for (double len : s4.piece_lengths) CHECK(len == Approx(0.5).epsilon(1e-12));
  const auto m = cover_metrics(square, s4);
  CHECK(m.gamma == Approx(0.5).epsilon(1e-12));
  CHECK(m.beta == Approx(0.5).epsilon(1e-12));

  for (double shift : {0.0, 0.3, 0.99}) {
    const auto one = cover_metrics(square, uniform_partition(square, 1, shift));
    CHECK(one.gamma == Approx(1.0));
    CHECK(one.beta == Approx(1.0));
  }
  CHECK(code_of([&] { uniform_partition(square, 0, 0.0); }) == ErrorCode::KTooSmall);
}

TEST_CASE("rectangle of aspect 10 at shift 0 cuts along the diagonal") {
  const auto rect = rectangle(10.0);
  CHECK(rect.edge_length(0) == Approx(10.0 / 22.0).epsilon(1e-12));
  CHECK(rect.edge_length(1) == Approx(1.0 / 22.0).epsilon(1e-12));
  const auto m = cover_metrics(rect, uniform_partition(rect, 2, 0.0));
  CHECK(m.gamma == Approx(0.5 + std::sqrt(101.0) / 22.0).epsilon(1e-12));
  // The best k = 2 cut is the short through-centre chord.
  const auto best = best_uniform_shift(rect, 2, ShiftObjective::Max, 4096);
  CHECK(cover_metrics(rect, best.cover).gamma == Approx(0.5 + 1.0 / 22.0).epsilon(1e-9));
}

TEST_CASE("best_uniform_shift examples") {
  const auto circle = unit_circle();
  const auto avg = best_uniform_shift(circle, 3, ShiftObjective::Avg, 4096);
  CHECK(std::abs(cover_metrics(circle, avg.cover).beta - beta_extremal(3)) < 1e-6);
  CHECK(std::abs(beta_extremal(3) - 0.609) < 1e-5);

  const auto square = unit_square();
  const auto best = best_uniform_shift(square, 4, ShiftObjective::Max, 4096);
  CHECK(best.shift == Approx(0.125).epsilon(1e-9));
  const double expected = 0.25 + std::sqrt(2.0) / 8.0;
  CHECK(cover_metrics(square, best.cover).gamma == Approx(expected).epsilon(1e-12));
  CHECK(std::abs(expected - brute_best_gamma(square, 4, 1000000)) < 1e-9);

  const auto one = best_uniform_shift(square, 1, ShiftObjective::Max, 16);
  CHECK(cover_metrics(square, one.cover).gamma == Approx(1.0));
  CHECK(code_of([&] { best_uniform_shift(square, 3, ShiftObjective::Max, 1); }) ==
        ErrorCode::OutOfRange);
}

TEST_CASE("best_uniform_shift is at least as good as a fine brute-force grid") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (int k : {2, 5}) {
      const auto best = best_uniform_shift(curve, k, ShiftObjective::Max, 4096);
      CHECK(cover_metrics(curve, best.cover).gamma <= brute_best_gamma(curve, k, 20000) + 1e-9);
      CHECK(best.shift >= 0.0);
      CHECK(best.shift < 1.0 / k);
    }
  }
}

TEST_CASE("theorem2_partition") {
  const auto circle = unit_circle();
  const auto c3 = theorem2_partition(circle, 3, 4096);
  REQUIRE(c3.k() == 3);
  CHECK(c3.construction == Construction::Theorem2);
  const double eps = 1.0 / 648.0;
  const double s = 1.0 / 3.0 + 2 * eps;
  CHECK(c3.pieces[0].length_frac == Approx(s).epsilon(1e-15));
  CHECK(c3.pieces[1].length_frac == Approx(1.0 / 3.0 - eps).epsilon(1e-14));
  CHECK(std::abs(c3.piece_lengths[0] - (s + circle_chord(s))) < 1e-6);
  for (int i : {1, 2}) {
    CHECK(c3.piece_lengths[i] <= 2.0 / 3.0 - 1.0 / 324.0);
    CHECK(std::abs(c3.piece_lengths[i] - (1.0 / 3.0 - eps + circle_chord(1.0 / 3.0 - eps))) <
          1e-6);
  }
  const auto m = cover_metrics(circle, c3);
  CHECK(m.argmax_piece == 0);
  CHECK(m.gamma <= gamma_upper_refined(3));

  const auto square = unit_square();
  CHECK(cover_metrics(square, theorem2_partition(square, 4, 4096)).gamma <=
        gamma_upper_refined(4) + 1e-6);

  CHECK(code_of([&] { theorem2_partition(square, 2, 4096); }) == ErrorCode::KTooSmall);
  const auto raw = build_curve(square.vertices(), false);
  auto scaled = raw.vertices();
  for (auto& p : scaled) {
    for (double& c : p.coords) c *= 3.0;
  }
  CHECK(code_of([&] { theorem2_partition(build_curve(scaled, false), 3, 64); }) ==
        ErrorCode::NotNormalized);
}

TEST_CASE("theorem2 arcs follow the long arc in traversal order") {
  const auto curve = random_closed(2, 8);
  const auto cover = theorem2_partition(curve, 5, 512);
  for (std::size_t i = 0; i + 1 < cover.k(); ++i) {
    const double end = wrap_unit(cover.pieces[i].t_start + cover.pieces[i].length_frac);
    const double gap = std::abs(end - cover.pieces[i + 1].t_start);
    CHECK(std::min(gap, 1.0 - gap) < 1e-12);
  }
}

TEST_CASE("optimized_partition") {
  const auto circle = unit_circle();
  const auto c3 = cover_metrics(circle, optimized_partition(circle, 3, 4096));
  CHECK(c3.gamma <= 0.644);
  CHECK(std::abs(c3.gamma - solve_sk(3).bound) < 1e-6);
  CHECK(cover_metrics(circle, optimized_partition(circle, 10, 4096)).gamma <= 0.200);
  CHECK(cover_metrics(ellipse_2_1(), optimized_partition(ellipse_2_1(), 5, 4096)).gamma <=
        0.398 + 1e-6);
  CHECK(optimized_partition(circle, 4, 256).construction == Construction::Optimized);
  CHECK(code_of([&] { optimized_partition(circle, 2, 4096); }) == ErrorCode::KTooSmall);
}

TEST_CASE("cover_metrics examples and validation") {
  const auto circle = unit_circle();
  const auto two = cover_metrics(circle, uniform_partition(circle, 2, 0.0));
  CHECK(std::abs(two.beta - (0.5 + 1.0 / kPi)) < 1e-6);
  CHECK(std::abs(two.gamma - (0.5 + 1.0 / kPi)) < 1e-6);

  const auto square = unit_square();
  const auto full = make_cover(square, {{0.4, 1.0}});
  const auto m = cover_metrics(square, full);
  CHECK(m.beta == 1.0);
  CHECK(m.gamma == 1.0);

  // Equal pieces: smallest index wins.
  CHECK(cover_metrics(square, uniform_partition(square, 4, 0.0)).argmax_piece == 0);

  CHECK(code_of([&] { cover_metrics(square, make_cover(square, {{0.0, 0.5}, {0.5, 0.4}})); }) ==
        ErrorCode::NotAPartition);
  CHECK(code_of([&] {
          cover_metrics(square, make_cover(square, {{0.0, 0.5}, {0.25, 0.25}, {0.6, 0.25}}));
        }) == ErrorCode::NotAPartition);
  Cover empty;
  CHECK(code_of([&] { cover_metrics(square, empty); }) == ErrorCode::NotAPartition);
}

TEST_CASE("uniform covers stay within 2/k and average below the extremal value") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (int k = 2; k <= 12; ++k) {
      CAPTURE(k);
      double beta_sum = 0.0;
      const int shifts = 64;
      for (int j = 0; j < shifts; ++j) {
        const double shift = static_cast<double>(j) / (static_cast<double>(k) * shifts);
        const auto m = cover_metrics(curve, uniform_partition(curve, k, shift));
        CHECK(m.gamma <= 2.0 / k + 1e-9);
        CHECK(m.gamma >= m.beta - 1e-15);
        CHECK(m.beta >= 1.0 / k);
        beta_sum += m.beta;
      }
      if (k <= 10) CHECK(beta_sum / shifts <= beta_extremal(k) + 1e-6);
    }
  }
}

TEST_CASE("uniform covers of the circle meet the lower bound at every shift") {
  const auto circle = unit_circle();
  for (int k = 2; k <= 10; ++k) {
    for (int j = 0; j < 16; ++j) {
      const double shift = j / (16.0 * k);
      CHECK(cover_metrics(circle, uniform_partition(circle, k, shift)).gamma >=
            beta_extremal(k) - 1e-4);
    }
  }
}

TEST_CASE("non-uniform certificates on the corpus") {
  for (const auto& [name, curve] : corpus()) {
    CAPTURE(name);
    for (int k : {3, 6, 10}) {
      CAPTURE(k);
      CHECK(cover_metrics(curve, theorem2_partition(curve, k, 4096)).gamma <=
            gamma_upper_refined(k) + 1e-6);
      CHECK(cover_metrics(curve, optimized_partition(curve, k, 4096)).gamma <=
            solve_sk(k).bound + 1e-6);
    }
  }
}
