#include "rspunct/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rspunct/errors.hpp"

namespace rspunct::bounds {

namespace {

// Strict "a < b" with the feasibility tolerance.
bool lt(double a, double b) { return a < b - kStrictTol; }

void require(bool ok, const std::string& constraint) {
  if (!ok) throw InfeasibleError(constraint);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

double johnson_radius(double R, int l) {
  if (!(R > 0)) throw std::invalid_argument("johnson_radius: R must be > 0");
  if (l < 1) throw std::invalid_argument("johnson_radius: l must be >= 1");
  return std::max(0.0, 1.0 - std::sqrt(static_cast<double>(l) * R));
}

double capacity_radius(double R) {
  if (!(R > 0 && R < 1)) throw std::invalid_argument("capacity_radius: R must be in (0,1)");
  return 1.0 - R;
}

double paper_radius(double R, int l) {
  if (l < 1) throw std::invalid_argument("paper_radius: l must be >= 1");
  if (!(R > 0)) throw std::invalid_argument("paper_radius: R must be > 0");
  if (R * l > 1.0 + kStrictTol)
    throw InfeasibleError("paper_radius: rate exceeds list-recovery feasibility (R > 1/l)");
  return 1.0 - (l + 1) * R / (R + 1);
}

double theorem_radius(int l, int L, double c, double R) {
  if (l < 1 || L < 1) throw std::invalid_argument("theorem_radius: need l >= 1 and L >= 1");
  const auto [lo, hi] = feasible_c_interval(R, l);
  require(lt(lo, c), "theorem_radius: c = " + fmt(c) + " not above (l+1)/(R+1) = " + fmt(lo));
  require(lt(c, hi), "theorem_radius: c = " + fmt(c) + " not below l/R = " + fmt(hi));
  return 1.0 - (l + static_cast<double>(L) * c * R) / (L + 1);
}

std::int64_t list_size(double zeta, int l) {
  if (l < 1) throw std::invalid_argument("list_size: l must be >= 1");
  if (!(zeta > 0)) throw std::invalid_argument("list_size: zeta must be > 0");
  return static_cast<std::int64_t>(std::floor(2.0 * l / zeta + kStrictTol));
}

std::pair<double, double> feasible_c_interval(double R, int l) {
  if (l < 1) throw std::invalid_argument("feasible_c_interval: l must be >= 1");
  if (!(R > 0)) throw std::invalid_argument("feasible_c_interval: R must be > 0");
  require(lt(R, l), "feasible_c_interval: empty interval, requires R < l");
  return {(l + 1) / (R + 1), l / R};
}

std::pair<double, double> feasible_cprime_interval(double c, double R, int l) {
  if (l < 1) throw std::invalid_argument("feasible_cprime_interval: l must be >= 1");
  require(lt(R * c, l), "feasible_cprime_interval: requires R*c < l, got R*c = " + fmt(R * c));
  const double hi = (c - 1) / (l - R * c);
  require(lt(1.0, hi),
          "feasible_cprime_interval: empty interval, (c-1)/(l-R*c) = " + fmt(hi) + " <= 1");
  return {1.0, hi};
}

std::pair<double, double> lambda_interval(double c, double cp, double R, int l) {
  if (l < 1) throw std::invalid_argument("lambda_interval: l must be >= 1");
  const double lo = (l * cp + 1) / (c * (R * cp + 1));
  require(lt(lo, 1.0), "lambda_interval: empty interval, lower bound " + fmt(lo) + " >= 1");
  return {lo, 1.0};
}

double alpha(int l, double c, double cp, double R, double lambda1) {
  if (l < 1) throw std::invalid_argument("alpha: l must be >= 1");
  const double value = (lambda1 * c * (1 + R * cp) - (l * cp + 1)) / (lambda1 * cp);
  require(value > kStrictTol,
          "alpha: nonpositive exponent " + fmt(value) + " (lambda1 outside its interval)");
  return value;
}

std::uint64_t field_size_bound(std::uint64_t n, double cp) {
  if (n < 1) throw std::invalid_argument("field_size_bound: n must be >= 1");
  if (!(cp > 1)) throw InfeasibleError("field_size_bound: requires cp > 1");
  const double exponent = cp / (cp - 1);
  // Shave the tolerance before ceil so exact powers do not round up.
  return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), exponent) - kStrictTol));
}

double chernoff_tail(double eps, std::uint64_t s) {
  if (!(eps >= 0 && eps <= 1)) throw std::invalid_argument("chernoff_tail: eps must be in [0,1]");
  if (s < 1) throw std::invalid_argument("chernoff_tail: s must be >= 1");
  return std::exp(-2.0 * eps * eps * static_cast<double>(s));
}

std::optional<std::string> ParamPlan::first_violated_constraint() const {
  const auto fail = [](const std::string& s) { return std::optional<std::string>(s); };
  if (l < 1) return fail("l >= 1");
  if (!(R > 0) || !lt(R * l, 1.0)) return fail("0 < R < 1/l");
  if (!(eps > 0)) return fail("eps > 0");
  if (!(zeta > 0 && zeta <= eps)) return fail("0 < zeta <= eps");
  if (L + 1 < 2.0 * l / eps - kStrictTol) return fail("L+1 >= 2l/eps");
  // (l+1-c)/c < R < l/c, equivalently c in ((l+1)/(R+1), l/R).
  if (!lt((l + 1.0) / (R + 1.0), c)) return fail("(l+1-c)/c < R");
  if (!lt(c, l / R)) return fail("R < l/c");
  // 1 < cprime < (c-1)/(l-Rc).
  if (!lt(1.0, cprime)) return fail("1 < c'");
  if (!lt(cprime, (c - 1) / (l - R * c))) return fail("c' < (c-1)/(l-Rc)");
  // 1/c < (l c' + 1)/(c (R c' + 1)) < lambda1 < lambda2 < 1.
  const double lam_lo = (l * cprime + 1) / (c * (R * cprime + 1));
  if (!lt(1.0 / c, lam_lo)) return fail("1/c < (lc'+1)/(c(Rc'+1))");
  if (!lt(lam_lo, lambda1)) return fail("(lc'+1)/(c(Rc'+1)) < lambda1");
  if (!lt(lambda1, lambda2)) return fail("lambda1 < lambda2");
  if (!lt(lambda2, 1.0)) return fail("lambda2 < 1");
  // alpha formula and positivity.
  const double a = (lambda1 * c * (1 + R * cprime) - (l * cprime + 1)) / (lambda1 * cprime);
  if (std::abs(a - alpha) > 1e-12) return fail("alpha consistent with its formula");
  if (!(alpha > 0)) return fail("alpha > 0");
  // Radius guarantee.
  if (radius < target_radius - 1e-12) return fail("radius >= paper_radius - eps");
  return std::nullopt;
}

ParamPlan plan_parameters(int l, double R, double eps, double zeta,
                          std::optional<std::uint32_t> n) {
  if (l < 1) throw std::invalid_argument("plan_parameters: l must be >= 1");
  require(R > 0 && lt(R * l, 1.0), "plan_parameters: requires 0 < R < 1/l");
  require(eps > 0 && eps < 1, "plan_parameters: requires 0 < eps < 1");
  require(zeta > 0 && zeta <= eps + kStrictTol, "plan_parameters: requires 0 < zeta <= eps");

  ParamPlan plan;
  plan.l = l;
  plan.R = R;
  plan.eps = eps;
  plan.zeta = zeta;
  // Smallest legal list size: L+1 >= 2l/eps.
  plan.L = static_cast<int>(std::ceil(2.0 * l / eps - kStrictTol)) - 1;
  if (plan.L < 1) plan.L = 1;

  const auto [c_lo, c_hi] = feasible_c_interval(R, l);
  const double span = c_hi - c_lo;
  // Keep (c - c_lo) * R <= eps/2 so the radius guarantee below holds, while
  // staying in the open interval.
  plan.c = c_lo + std::min(eps / (2 * R), span / 2);

  const auto [cp_lo, cp_hi] = feasible_cprime_interval(plan.c, R, l);
  plan.cprime = (cp_lo + cp_hi) / 2;

  const auto [lam_lo, lam_hi] = lambda_interval(plan.c, plan.cprime, R, l);
  plan.lambda1 = lam_lo + (lam_hi - lam_lo) / 3;
  plan.lambda2 = lam_lo + 2 * (lam_hi - lam_lo) / 3;

  plan.alpha = alpha(l, plan.c, plan.cprime, R, plan.lambda1);
  plan.radius = theorem_radius(l, plan.L, plan.c, R);
  plan.target_radius = paper_radius(R, l) - eps;
  plan.qmin_exponent = plan.cprime / (plan.cprime - 1);

  if (n) {
    plan.n = *n;
    const auto k = static_cast<std::uint32_t>(
        std::clamp(std::llround(R * *n), 1ll, static_cast<long long>(*n)));
    plan.k = k;
    plan.h = static_cast<std::int64_t>(k) - 1;
    plan.q_min = field_size_bound(*n, plan.cprime);
  }

  if (const auto violated = plan.first_violated_constraint())
    throw InfeasibleError("plan_parameters: planned values violate: " + *violated);
  return plan;
}

std::vector<CurveRow> curve_table(int l, double eps, double rmin, double rmax, int steps) {
  if (l < 1) throw std::invalid_argument("curve_table: l must be >= 1");
  if (!(rmin > 0 && rmin <= rmax && rmax < 1))
    throw std::invalid_argument("curve_table: requires 0 < rmin <= rmax < 1");
  if (steps < 2 && rmin != rmax) throw std::invalid_argument("curve_table: steps must be >= 2");
  if (steps < 1) throw std::invalid_argument("curve_table: steps must be >= 1");

  std::vector<CurveRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    CurveRow row;
    row.R = steps == 1 ? rmin : rmin + (rmax - rmin) * i / (steps - 1);
    row.johnson = johnson_radius(row.R, l);
    row.capacity = capacity_radius(row.R);
    try {
      row.paper = paper_radius(row.R, l);
    } catch (const InfeasibleError&) {
    }
    try {
      const auto plan = plan_parameters(l, row.R, eps, eps);
      row.theorem = plan.radius;
    } catch (const InfeasibleError&) {
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rspunct::bounds
