#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rspunct::bounds {

// Strict-inequality tolerance for the real-valued constraint system:
// "x < y" is accepted iff x < y - kStrictTol, so boundary-adjacent
// parameter choices are classified as infeasible rather than feasible.
inline constexpr double kStrictTol = 1e-9;

// Radius up to which every rate-R code is combinatorially list-recoverable
// with input lists of size l and polynomial output lists: max(0, 1 - sqrt(l*R)).
// Requires R > 0.
double johnson_radius(double R, int l);

// Radius 1 - R beyond which sub-exponential list sizes are impossible.
// Requires 0 < R < 1.
double capacity_radius(double R);

// The improved list-recovery radius 1 - (l+1)R/(R+1) achieved by random
// puncturings. Defined (nonnegative) for 0 < R <= 1/l; throws
// InfeasibleError for larger rates.
double paper_radius(double R, int l);

// Radius 1 - (l + L*c*R)/(L+1) guaranteed for a concrete list size L and
// feasible constant c. Throws InfeasibleError naming the violated inequality
// when c lies outside feasible_c_interval(R, l).
double theorem_radius(int l, int L, double c, double R);

// Output list size floor(2l/zeta) sufficient for radius slack zeta > 0.
std::int64_t list_size(double zeta, int l);

// Open interval ((l+1)/(R+1), l/R) of feasible trade-off constants c.
// Nonempty iff R < l; throws InfeasibleError otherwise.
std::pair<double, double> feasible_c_interval(double R, int l);

// Open interval (1, (c-1)/(l - R*c)) of feasible second-stage constants.
// Requires R*c < l and a nonempty result; throws InfeasibleError otherwise.
std::pair<double, double> feasible_cprime_interval(double c, double R, int l);

// Open interval ((l*cp + 1)/(c*(R*cp + 1)), 1) from which lambda1 < lambda2
// are drawn. Throws InfeasibleError when empty.
std::pair<double, double> lambda_interval(double c, double cp, double R, int l);

// Exponent alpha = (lambda1*c*(1 + R*cp) - (l*cp + 1)) / (lambda1*cp).
// Positive exactly when lambda1 lies strictly inside lambda_interval;
// throws InfeasibleError on a nonpositive result.
double alpha(int l, double c, double cp, double R, double lambda1);

// Smallest admissible field size ceil(n^(cp/(cp-1))). Requires cp > 1.
std::uint64_t field_size_bound(std::uint64_t n, double cp);

// Additive Chernoff tail exp(-2 * eps^2 * s). Requires 0 <= eps <= 1, s >= 1.
double chernoff_tail(double eps, std::uint64_t s);

// A complete, self-consistent assignment of every constant in the
// rate/radius constraint system.
struct ParamPlan {
  int l = 1;
  double R = 0;
  double eps = 0;
  double zeta = 0;
  int L = 0;
  double c = 0;
  double cprime = 0;
  double lambda1 = 0;
  double lambda2 = 0;
  double alpha = 0;
  double radius = 0;        // theorem_radius(l, L, c, R)
  double target_radius = 0; // paper_radius(R, l) - eps, the guarantee floor
  double qmin_exponent = 0; // field-size bound is ceil(n^qmin_exponent)

  // Present only when the caller supplies a concrete punctured length n.
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> k;      // round(R*n), clamped to [1, n]
  std::optional<std::int64_t> h;       // distance defect k - 1
  std::optional<std::uint64_t> q_min;  // field_size_bound(n, cprime)

  // Re-checks every defining inequality; returns the first violated
  // constraint as text, or nullopt if the plan is internally consistent.
  std::optional<std::string> first_violated_constraint() const;
};

// Deterministic parameter choice: L = ceil(2l/eps) - 1 (smallest legal),
// c barely above its lower bound (capped by the eps/2 rule), cprime at the
// midpoint of its interval, lambda1/lambda2 at 1/3 and 2/3 of theirs.
// Guarantees radius >= paper_radius(R, l) - eps. Requires 0 < R < 1/l and
// 0 < zeta <= eps; throws InfeasibleError naming the first violated
// constraint.
ParamPlan plan_parameters(int l, double R, double eps, double zeta,
                          std::optional<std::uint32_t> n = std::nullopt);

// One row of the trade-off curve table; fields absent where the curve is
// undefined or the parameter system infeasible.
struct CurveRow {
  double R = 0;
  std::optional<double> johnson;
  std::optional<double> capacity;
  std::optional<double> paper;
  std::optional<double> theorem;  // theorem_radius of plan_parameters(l, R, eps, eps)
};

// Rows for `steps` evenly spaced rates in [rmin, rmax] (inclusive).
// Requires 0 < rmin <= rmax < 1 and steps >= 2 (steps >= 1 if rmin == rmax).
std::vector<CurveRow> curve_table(int l, double eps, double rmin, double rmax, int steps);

}  // namespace rspunct::bounds
