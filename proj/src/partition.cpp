#include "curvecover/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curvecover/bounds.hpp"
#include "curvecover/chord.hpp"
#include "curvecover/error.hpp"
#include "curvecover/golden.hpp"

namespace curvecover {
namespace {

constexpr double kRefineTol = 1e-10;
constexpr double kPartitionTol = 1e-9;

void require_k(int k, int min_k) {
  if (k < min_k) {
    throw Error(ErrorCode::KTooSmall,
                "k = " + std::to_string(k) + " but at least " + std::to_string(min_k) + " required");
  }
}

// Distance between two parameters on the unit circle.
double circular_gap(double a, double b) {
  const double d = std::abs(wrap_unit(a) - wrap_unit(b));
  return std::min(d, 1.0 - d);
}

// One arc of length s starting at t_star, then k-1 equal arcs after it.
Cover long_arc_cover(const ClosedCurve& curve, int k, double s, double t_star, Construction tag) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(k));
  arcs.push_back({wrap_unit(t_star), s});
  const double short_len = (1.0 - s) / (k - 1);
  for (int i = 0; i < k - 1; ++i) {
    arcs.push_back({wrap_unit(t_star + s + i * short_len), short_len});
  }
  return make_cover(curve, std::move(arcs), tag, s);
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::Uniform: return "uniform";
    case Construction::Theorem2: return "theorem2";
    case Construction::Optimized: return "optimized";
    case Construction::Custom: return "custom";
  }
  return "custom";
}

Cover make_cover(const ClosedCurve& curve, std::vector<Arc> arcs, Construction tag,
                 double parameter) {
  Cover cover;
  cover.piece_lengths.reserve(arcs.size());
  for (const auto& arc : arcs) {
    validate_arc(arc);
    cover.piece_lengths.push_back(cover_piece_length(curve, arc));
  }
  cover.pieces = std::move(arcs);
  cover.construction = tag;
  cover.parameter = parameter;
  return cover;
}

Cover uniform_partition(const ClosedCurve& curve, int k, double shift) {
  require_k(k, 1);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(k));
  const double frac = 1.0 / k;
  for (int i = 0; i < k; ++i) arcs.push_back({wrap_unit(shift + static_cast<double>(i) / k), frac});
  return make_cover(curve, std::move(arcs), Construction::Uniform, shift);
}

ShiftChoice best_uniform_shift(const ClosedCurve& curve, int k, ShiftObjective objective,
                               int grid_size) {
  require_k(k, 1);
  if (grid_size < 2) throw Error(ErrorCode::OutOfRange, "grid_size must be at least 2");

  const double period = 1.0 / k;
  if (k == 1) return {0.0, uniform_partition(curve, 1, 0.0)};

  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(grid_size) + curve.size());
  for (int j = 0; j < grid_size; ++j) {
    samples.push_back(static_cast<double>(j) / (static_cast<double>(k) * grid_size));
  }
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double u = curve.vertex_parameter(i);
    double r = u - period * std::floor(u / period);
    if (r >= period) r = 0.0;
    samples.push_back(r);
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  // Arc lengths are all L/k, so only the chords vary with the shift.
  auto score = [&](double shift) {
    double total = 0.0;
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      const double c = chord_length(curve, shift + static_cast<double>(i) / k, period);
      total += c;
      worst = std::max(worst, c);
    }
    return objective == ShiftObjective::Max ? worst : total;
  };
  const auto best = minimize_over_cells(score, samples, period, kRefineTol);
  return {best.x, uniform_partition(curve, k, best.x)};
}

Cover theorem2_partition(const ClosedCurve& curve, int k, int grid_size) {
  require_k(k, 3);
  const double k4 = std::pow(static_cast<double>(k), 4);
  const double eps = 1.0 / (8.0 * k4);
  const double s = 1.0 / k + (k - 1) * eps;
  const auto start = min_chord_start(curve, s, grid_size);
  return long_arc_cover(curve, k, s, start.t_star, Construction::Theorem2);
}

Cover optimized_partition(const ClosedCurve& curve, int k, int grid_size) {
  require_k(k, 3);
  const double s = solve_sk(k).s_k;
  const auto start = min_chord_start(curve, s, grid_size);
  return long_arc_cover(curve, k, s, start.t_star, Construction::Optimized);
}

CoverMetrics cover_metrics(const ClosedCurve& curve, const Cover& cover) {
  const std::size_t k = cover.k();
  if (k == 0 || cover.piece_lengths.size() != k) {
    throw Error(ErrorCode::NotAPartition, "cover has no pieces or mismatched piece lengths");
  }
  double frac_sum = 0.0;
  for (const auto& arc : cover.pieces) frac_sum += arc.length_frac;
  if (std::abs(frac_sum - 1.0) > kPartitionTol) {
    throw Error(ErrorCode::NotAPartition,
                "arc fractions sum to " + std::to_string(frac_sum) + ", not 1");
  }
  // With fractions summing to 1, the arcs tile the curve iff each one ends
  // where the next (in start order) begins.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cover.pieces[a].t_start < cover.pieces[b].t_start;
  });
  for (std::size_t i = 0; i < k; ++i) {
    const auto& cur = cover.pieces[order[i]];
    const auto& next = cover.pieces[order[(i + 1) % k]];
    if (circular_gap(cur.t_start + cur.length_frac, next.t_start) > kPartitionTol) {
      throw Error(ErrorCode::NotAPartition, "arcs overlap or leave a gap");
    }
  }

  const double length = curve.length();
  CoverMetrics m;
  double total = 0.0;
  double worst = -1.0;
  for (std::size_t i = 0; i < k; ++i) {
    total += cover.piece_lengths[i];
    if (cover.piece_lengths[i] > worst) {
      worst = cover.piece_lengths[i];
      m.argmax_piece = i;
    }
  }
  m.beta = total / (static_cast<double>(k) * length);
  m.gamma = worst / length;
  return m;
}

}  // namespace curvecover
