#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rspunct/bounds.hpp"
#include "rspunct/errors.hpp"

using namespace rspunct::bounds;
using rspunct::InfeasibleError;

TEST_CASE("radius formulas match hand-computed values") {
  CHECK(johnson_radius(0.1, 2) == doctest::Approx(0.5527864045000421).epsilon(1e-15));
  CHECK(johnson_radius(0.25, 1) == doctest::Approx(0.5));
  CHECK(johnson_radius(0.9, 2) == 0.0);  // clamped at zero
  CHECK(capacity_radius(0.3) == doctest::Approx(0.7));
  CHECK(paper_radius(0.2, 2) == doctest::Approx(0.5));
  CHECK(paper_radius(0.25, 1) == doctest::Approx(0.6));
  CHECK(paper_radius(0.5, 2) == doctest::Approx(0.0));  // defined up to R = 1/l
  CHECK(theorem_radius(1, 3, 2.0, 0.25) == doctest::Approx(0.375));
  CHECK(theorem_radius(1, 1, 2.0, 0.25) == doctest::Approx(0.25));
}

TEST_CASE("domain violations are rejected") {
  CHECK_THROWS_AS(johnson_radius(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(johnson_radius(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(capacity_radius(0.0), std::invalid_argument);
  CHECK_THROWS_AS(capacity_radius(1.0), std::invalid_argument);
  CHECK_THROWS_AS(paper_radius(0.6, 2), InfeasibleError);  // R > 1/l
  CHECK_THROWS_AS(paper_radius(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(list_size(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_tail(1.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_tail(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(field_size_bound(10, 1.0), InfeasibleError);  // needs cp > 1
}

TEST_CASE("output list size floors 2l over zeta") {
  CHECK(list_size(0.5, 1) == 4);
  CHECK(list_size(0.5, 2) == 8);
  CHECK(list_size(2.0, 1) == 1);
  CHECK(list_size(0.3, 1) == 6);   // 6.66 floors to 6
  CHECK(list_size(0.25, 3) == 24); // exact division stays exact
}

TEST_CASE("parameter intervals match hand computations") {
  const auto c1 = feasible_c_interval(0.4, 1);
  CHECK(c1.first == doctest::Approx(10.0 / 7));
  CHECK(c1.second == doctest::Approx(2.5));
  const auto c2 = feasible_c_interval(0.5, 2);
  CHECK(c2.first == doctest::Approx(2.0));
  CHECK(c2.second == doctest::Approx(4.0));
  CHECK_THROWS_AS(feasible_c_interval(1.0, 1), InfeasibleError);  // needs R < l

  const auto cp1 = feasible_cprime_interval(2.0, 0.4, 1);
  CHECK(cp1.first == doctest::Approx(1.0));
  CHECK(cp1.second == doctest::Approx(5.0));
  const auto cp2 = feasible_cprime_interval(3.0, 0.5, 2);
  CHECK(cp2.first == doctest::Approx(1.0));
  CHECK(cp2.second == doctest::Approx(4.0));
  // c = 1 makes (c-1)/(l-Rc) = 0, an empty interval.
  CHECK_THROWS_AS(feasible_cprime_interval(1.0, 0.4, 1), InfeasibleError);

  const auto lam1 = lambda_interval(2.0, 2.0, 0.4, 1);
  CHECK(lam1.first == doctest::Approx(5.0 / 6));
  CHECK(lam1.second == doctest::Approx(1.0));
  const auto lam2 = lambda_interval(3.0, 2.0, 0.5, 2);
  CHECK(lam2.first == doctest::Approx(5.0 / 6));
  CHECK(lam2.second == doctest::Approx(1.0));
  // cprime outside its own interval empties the lambda interval.
  CHECK_THROWS_AS(lambda_interval(1.44, 1.1, 0.4, 1), InfeasibleError);
}

TEST_CASE("alpha is the stated expression and positive only inside the interval") {
  CHECK(alpha(1, 2.0, 2.0, 0.4, 0.9) == doctest::Approx(2.0 / 15).epsilon(1e-12));
  CHECK(alpha(2, 3.0, 2.0, 0.5, 0.9) == doctest::Approx(2.0 / 9).epsilon(1e-12));
  // At lambda1 exactly on the lower boundary the exponent vanishes.
  CHECK_THROWS_AS(alpha(1, 2.0, 2.0, 0.4, 5.0 / 6), InfeasibleError);
  CHECK_THROWS_AS(alpha(1, 2.0, 2.0, 0.4, 0.5), InfeasibleError);
}

TEST_CASE("field size bound rounds up except at exact powers") {
  CHECK(field_size_bound(10, 3.0) == 32);      // 10^1.5 = 31.62...
  CHECK(field_size_bound(100, 2.0) == 10000);  // exact power stays exact
  CHECK(field_size_bound(1, 2.0) == 1);
  CHECK(field_size_bound(7, 1.5) == 343);      // 7^3 exactly
}

TEST_CASE("chernoff tail matches the closed form") {
  CHECK(chernoff_tail(1.0, 1) == doctest::Approx(std::exp(-2.0)));
  CHECK(chernoff_tail(1.0, 10) == doctest::Approx(std::exp(-20.0)));
  CHECK(chernoff_tail(0.0, 5) == doctest::Approx(1.0));
  CHECK(chernoff_tail(0.1, 100) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("radius guarantee grows with the output list size") {
  double prev = 0;
  for (int L = 1; L <= 30; ++L) {
    const double r = theorem_radius(1, L, 2.0, 0.25);
    CHECK(r >= prev);
    CHECK(r < 1 - 2.0 * 0.25 + 1e-12);  // supremum 1 - cR
    prev = r;
  }
}

TEST_CASE("infeasible trade-off constants are named") {
  CHECK_THROWS_AS(theorem_radius(1, 2, 1.0, 0.4), InfeasibleError);   // below the interval
  CHECK_THROWS_AS(theorem_radius(1, 2, 2.5, 0.4), InfeasibleError);   // at the open endpoint
  CHECK_THROWS_AS(theorem_radius(1, 2, 2.6, 0.4), InfeasibleError);   // above
  CHECK_NOTHROW(theorem_radius(1, 2, 2.0, 0.4));
}

TEST_CASE("planner reproduces the documented deterministic choices") {
  const ParamPlan plan = plan_parameters(1, 0.25, 0.1, 0.1);
  CHECK(plan.L == 19);  // ceil(2/0.1) - 1
  CHECK(plan.c == doctest::Approx(1.8));  // lower bound 1.6 plus eps/(2R) = 0.2
  CHECK(plan.cprime == doctest::Approx((1.0 + 0.8 / 0.55) / 2));
  CHECK(plan.radius == doctest::Approx(0.5225));
  CHECK(plan.target_radius == doctest::Approx(0.5));
  CHECK(plan.radius >= plan.target_radius - 1e-12);
  CHECK(plan.alpha > 0);
  CHECK(plan.lambda1 < plan.lambda2);
  CHECK_FALSE(plan.first_violated_constraint().has_value());
  CHECK_FALSE(plan.n.has_value());
  CHECK_FALSE(plan.q_min.has_value());

  const ParamPlan sized = plan_parameters(1, 0.25, 0.1, 0.1, 100);
  REQUIRE(sized.n.has_value());
  CHECK(*sized.k == 25);
  CHECK(*sized.h == 24);
  CHECK(*sized.q_min == field_size_bound(100, sized.cprime));
  CHECK(sized.qmin_exponent == doctest::Approx(5.4));
}

TEST_CASE("planner rejects out-of-domain requests") {
  CHECK_THROWS_AS(plan_parameters(2, 0.5, 0.1, 0.1), InfeasibleError);   // R = 1/l
  CHECK_THROWS_AS(plan_parameters(2, 0.6, 0.1, 0.1), InfeasibleError);   // R > 1/l
  CHECK_THROWS_AS(plan_parameters(1, 0.25, 0.0, 0.1), InfeasibleError);  // eps = 0
  CHECK_THROWS_AS(plan_parameters(1, 0.25, 0.1, 0.2), InfeasibleError);  // zeta > eps
  CHECK_THROWS_AS(plan_parameters(1, 0.25, 0.1, 0.0), InfeasibleError);  // zeta = 0
  CHECK_THROWS_AS(plan_parameters(0, 0.25, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("tampered plans fail their own constraint re-check") {
  ParamPlan plan = plan_parameters(2, 0.25, 0.2, 0.2);
  CHECK_FALSE(plan.first_violated_constraint().has_value());
  ParamPlan bad = plan;
  bad.c = 100.0;
  CHECK(bad.first_violated_constraint().has_value());
  bad = plan;
  bad.lambda1 = bad.lambda2 + 0.001;
  CHECK(bad.first_violated_constraint().has_value());
  bad = plan;
  bad.alpha += 0.5;
  CHECK(bad.first_violated_constraint() == std::optional<std::string>("alpha consistent with its formula"));
  bad = plan;
  bad.radius = bad.target_radius - 0.1;
  CHECK(bad.first_violated_constraint() == std::optional<std::string>("radius >= paper_radius - eps"));
}

TEST_CASE("curve table covers the grid and blanks infeasible cells") {
  const auto rows = curve_table(2, 0.1, 0.1, 0.9, 9);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().R == doctest::Approx(0.1));
  CHECK(rows.back().R == doctest::Approx(0.9));
  for (const auto& row : rows) {
    REQUIRE(row.johnson.has_value());
    REQUIRE(row.capacity.has_value());
    if (row.R < 0.5 - 1e-9) {
      REQUIRE(row.paper.has_value());
      CHECK(*row.johnson <= *row.paper + 1e-12);
      CHECK(*row.paper <= *row.capacity + 1e-12);
    }
    if (row.R > 0.5 + 1e-9) {
      CHECK_FALSE(row.paper.has_value());
      CHECK_FALSE(row.theorem.has_value());
    }
    if (row.theorem.has_value() && row.paper.has_value()) {
      CHECK(*row.theorem >= *row.paper - 0.1 - 1e-12);  // within eps of the target
    }
  }
  CHECK_THROWS_AS(curve_table(1, 0.1, 0.0, 0.9, 5), std::invalid_argument);
  CHECK_THROWS_AS(curve_table(1, 0.1, 0.5, 0.4, 5), std::invalid_argument);
  CHECK(curve_table(1, 0.1, 0.3, 0.3, 1).size() == 1);
}
