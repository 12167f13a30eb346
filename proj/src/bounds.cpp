#include "curvecover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "curvecover/error.hpp"

namespace curvecover {
namespace {

constexpr double kPi = std::numbers::pi;

void require_k(int k, int min_k) {
  if (k < min_k) {
    throw Error(ErrorCode::KTooSmall,
                "k = " + std::to_string(k) + " but at least " + std::to_string(min_k) + " required");
  }
}

}  // namespace

double beta_extremal(int k) {
  require_k(k, 1);
  return 1.0 / k + std::sin(kPi / k) / kPi;
}

double gamma_upper_simple(int k) {
  require_k(k, 2);
  return 2.0 / k;
}

double gamma_upper_refined(int k) {
  require_k(k, 3);
  const double k4 = std::pow(static_cast<double>(k), 4);
  return 2.0 / k - 1.0 / (4.0 * k4);
}

double balance_residual(int k, double s) {
  return s + std::sin(kPi * s) / kPi - 2.0 * (1.0 - s) / (k - 1);
}

RootBound solve_sk(int k, double tol) {
  require_k(k, 3);
  if (!(tol > 0.0)) throw Error(ErrorCode::OutOfRange, "tolerance must be positive");

  double lo = 0.0;
  double hi = 0.5;
  const double f_lo = balance_residual(k, lo);
  const double f_hi = balance_residual(k, hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw Error(ErrorCode::NoBracket, "balance equation does not change sign on [0, 1/2]");
  }
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (balance_residual(k, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s = 0.5 * (lo + hi);
  return {s, 2.0 * (1.0 - s) / (k - 1)};
}

std::map<int, double> bkk_table(int k_max) {
  require_k(k_max, 1);
  std::vector<double> g(static_cast<std::size_t>(k_max) + 1, 0.0);
  g[1] = 1.0;
  if (k_max >= 2) g[2] = 0.5 + 1.0 / kPi;
  const double sum_factor = 1.0 + 2.0 / kPi;
  for (int k = 3; k <= k_max; ++k) {
    double best = INFINITY;
    for (int a = 2; a * a <= k; ++a) {
      if (k % a == 0) best = std::min(best, g[a] * g[k / a]);
    }
    for (int a = 1; a <= k / 2; ++a) {
      const int b = k - a;
      best = std::min(best, sum_factor * g[a] * g[b] / (g[a] + g[b]));
    }
    g[k] = best;
  }
  std::map<int, double> out;
  for (int k = 1; k <= k_max; ++k) out.emplace(k, g[k]);
  return out;
}

double sin_taylor_upper(double x) {
  if (!(x >= 0.0 && x <= kPi)) throw Error(ErrorCode::OutOfRange, "x must lie in [0, pi]");
  return x - x * x * x / 12.0;
}

double idle_time_lower(std::span<const double> speeds) {
  if (speeds.empty()) throw Error(ErrorCode::EmptyInput, "no agent speeds");
  double total = 0.0;
  for (double v : speeds) {
    if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveSpeed, "speeds must be positive");
    total += v;
  }
  return 1.0 / total;
}

std::vector<BoundsRow> table1(int k_max) {
  require_k(k_max, 1);
  const auto bkk = bkk_table(k_max);
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    BoundsRow row;
    row.k = k;
    row.lower = beta_extremal(k);
    row.bkk_upper = bkk.at(k);
    if (k >= 3) {
      const auto root = solve_sk(k);
      row.new_upper = root.bound;
      row.s_k = root.s_k;
    } else {
      row.new_upper = k == 2 ? gamma_upper_simple(2) : 1.0;
    }
    rows.push_back(row);
  }
  return rows;
}

double round_down_3(double x) {
  const double scaled = x * 1000.0;
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) < 1e-9) return nearest / 1000.0;
  return std::floor(scaled) / 1000.0;
}

double round_up_3(double x) {
  const double scaled = x * 1000.0;
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) < 1e-9) return nearest / 1000.0;
  return std::ceil(scaled) / 1000.0;
}

std::string format_3(double x) {
  if (x == std::round(x)) return std::to_string(static_cast<long long>(x));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

RenderedRow render_row(const BoundsRow& row) {
  return {row.k, format_3(round_down_3(row.lower)), format_3(round_up_3(row.bkk_upper)),
          row.k <= 2 ? std::string("--") : format_3(round_up_3(row.new_upper))};
}

}  // namespace curvecover
