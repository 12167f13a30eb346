#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvecover {

/// 1/k + sin(pi/k)/pi: the extremal mean-piece ratio for k uniform arcs, and
/// the circle lower bound on the max-piece ratio.
double beta_extremal(int k);

/// 2/k, from cutting into k equal arcs. Requires k >= 2.
double gamma_upper_simple(int k);

/// 2/k - 1/(4k^4), from one slightly longer min-chord arc. Requires k >= 3.
double gamma_upper_refined(int k);

struct RootBound {
  double s_k;
  double bound;
};

/// Residual of the balancing equation s + sin(pi s)/pi = 2(1 - s)/(k - 1).
double balance_residual(int k, double s);

/// Root of balance_residual on (0, 1/2) by bisection until the bracket is
/// narrower than tol. bound = 2(1 - s_k)/(k - 1).
RootBound solve_sk(int k, double tol = 1e-14);

/// Recursive planar upper bounds: g(1) = 1, g(2) = 1/2 + 1/pi, and for k >= 3
/// the minimum over products g(a) g(b) with a, b >= 2 and over sums
/// (1 + 2/pi) g(a) g(b) / (g(a) + g(b)) with a, b >= 1.
std::map<int, double> bkk_table(int k_max);

/// x - x^3/12, an upper bound on sin(x) for 0 <= x <= pi.
double sin_taylor_upper(double x);

/// Fence patrolling: the idle time of any schedule on a unit fence is at least
/// 1 / (sum of the agents' maximum speeds).
double idle_time_lower(std::span<const double> speeds);

struct BoundsRow {
  int k = 1;
  double lower = 0.0;
  double bkk_upper = 0.0;
  double new_upper = 0.0;
  std::optional<double> s_k;
};

std::vector<BoundsRow> table1(int k_max);

/// Rounds toward zero / toward +inf at 3 decimals. Values within 1e-9 of a
/// grid point (in units of the last decimal) snap to it first.
double round_down_3(double x);
double round_up_3(double x);

/// "1", "0.818", ...: three decimals with integers printed bare.
std::string format_3(double x);

struct RenderedRow {
  int k;
  std::string lower;
  std::string bkk_upper;
  std::string new_upper;  // "--" for k <= 2
};

RenderedRow render_row(const BoundsRow& row);

}  // namespace curvecover
