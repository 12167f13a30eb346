#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "curvecover/curve.hpp"

namespace curvecover {

enum class Construction { Uniform, Theorem2, Optimized, Custom };

std::string_view to_string(Construction c);

// k arcs partitioning a curve, each closed up by its endpoint chord.
struct Cover {
  std::vector<Arc> pieces;
  std::vector<double> piece_lengths;
  Construction construction = Construction::Custom;
  // Shift for uniform covers, long-arc length for the non-uniform ones.
  double parameter = 0.0;

  std::size_t k() const noexcept { return pieces.size(); }
};

// Ratios relative to the curve length L. beta is the mean piece ratio
// (sum of piece lengths over k*L), gamma the largest.
struct CoverMetrics {
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t argmax_piece = 0;
};

enum class ShiftObjective { Max, Avg };

struct ShiftChoice {
  double shift;
  Cover cover;
};

// Builds a cover from explicit arcs, computing the piece lengths.
Cover make_cover(const ClosedCurve& curve, std::vector<Arc> arcs,
                 Construction tag = Construction::Custom, double parameter = 0.0);

// k arcs of length 1/k starting at shift, shift + 1/k, ... (mod 1).
Cover uniform_partition(const ClosedCurve& curve, int k, double shift);

// Minimizes gamma (Max) or beta (Avg) of the uniform cover over shifts in
// [0, 1/k): grid {j / (k * grid_size)} plus vertex-crossing shifts, then
// golden-section refinement of the best cell.
ShiftChoice best_uniform_shift(const ClosedCurve& curve, int k, ShiftObjective objective,
                               int grid_size = 4096);

// One arc of length 1/k + (k-1)/(8k^4) placed where its chord is shortest,
// followed by k-1 equal arcs covering the rest in traversal order.
Cover theorem2_partition(const ClosedCurve& curve, int k, int grid_size = 4096);

// Same layout with the long arc of length s_k, the balancing root.
Cover optimized_partition(const ClosedCurve& curve, int k, int grid_size = 4096);

// Throws NotAPartition unless the arcs tile the curve.
CoverMetrics cover_metrics(const ClosedCurve& curve, const Cover& cover);

}  // namespace curvecover
