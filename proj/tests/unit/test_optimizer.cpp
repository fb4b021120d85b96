#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetabounds/errors.hpp"
#include "zetabounds/optimizer.hpp"
#include "zetabounds/published_tables.hpp"

using namespace zetabounds;

namespace {

const PrecisionContext& ctx() {
  static const PrecisionContext c(128);
  return c;
}

SearchSpace box2() {
  return {{{"x", -2, 3, false}, {"y", 0.01, 10, true}}};
}

Evaluation bowl(const std::map<std::string, double>& p) {
  const double x = p.at("x") - 0.7, y = std::log(p.at("y") / 0.5);
  return {1.0 + x * x + 2 * y * y, ""};
}

}  // namespace

TEST_CASE("search space validation") {
  CHECK_NOTHROW(box2().validate());
  CHECK_THROWS_AS((SearchSpace{{{"x", 1, 0, false}}}.validate()), DomainError);
  CHECK_THROWS_AS((SearchSpace{{{"x", 0, 1, true}}}.validate()), DomainError);
  CHECK_THROWS_AS((SearchSpace{{{"epsilon", 0.5, 1.5, false}}}.validate()), DomainError);
  CHECK_THROWS_AS((SearchSpace{{{"beta", 0.0, 0.5, false}}}.validate()), DomainError);
  CHECK(box2().find("y") != nullptr);
  CHECK(box2().find("z") == nullptr);
}

TEST_CASE("minimize finds a smooth minimum inside the box") {
  const MinimizeResult r = minimize(bowl, box2(), 600, 1);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.best.at("x") == doctest::Approx(0.7).epsilon(1e-3));
  CHECK(r.best.at("y") == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(r.evaluations <= 600);
  CHECK(r.most_violated.empty());
}

TEST_CASE("minimize respects the budget and stays inside the box") {
  for (long budget : {64L, 100L, 333L}) {
    long calls = 0;
    bool inside = true;
    auto f = [&](const std::map<std::string, double>& p) {
      ++calls;
      inside = inside && p.at("x") >= -2 && p.at("x") <= 3 && p.at("y") >= 0.01 && p.at("y") <= 10;
      return bowl(p);
    };
    const MinimizeResult r = minimize(f, box2(), budget, 3);
    CHECK(calls <= budget);
    CHECK(r.evaluations == calls);
    CHECK(inside);
  }
  CHECK_THROWS_AS(minimize(bowl, box2(), 10, 1), DomainError);
}

TEST_CASE("minimize is deterministic in the seed") {
  const MinimizeResult a = minimize(bowl, box2(), 300, 42, 8, true);
  const MinimizeResult b = minimize(bowl, box2(), 300, 42, 8, true);
  CHECK(a.best == b.best);
  CHECK(a.value == b.value);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].first == b.trace[i].first);
    CHECK(a.trace[i].second == b.trace[i].second);
  }
  const MinimizeResult c = minimize(bowl, box2(), 300, 43, 8, true);
  CHECK(c.trace.front().first != a.trace.front().first);
}

TEST_CASE("infeasible objective reports the most violated constraint") {
  auto f = [](const std::map<std::string, double>& p) {
    return Evaluation{INFINITY, p.at("x") > 2.5 ? "rare" : "common"};
  };
  const MinimizeResult r = minimize(f, box2(), 200, 1);
  CHECK(std::isinf(r.value));
  CHECK(r.most_violated == "common");
}

TEST_CASE("a singleton space is evaluated once per grid point") {
  const SearchSpace s{{{"x", 0.25, 0.25, false}}};
  const MinimizeResult r = minimize([](const auto& p) { return Evaluation{p.at("x"), ""}; }, s, 50, 1);
  CHECK(r.value == 0.25);
  CHECK(r.best.at("x") == 0.25);
}

TEST_CASE("objective names and defaults") {
  CHECK(parse_objective("q1") == Objective::Q1TwoRegime);
  CHECK(parse_objective("k2") == Objective::K2);
  CHECK_THROWS_AS(parse_objective("q3"), DomainError);
  CHECK(to_string(Objective::K1) == "k1");
  CHECK(default_c_RH_inv(22) == 12);
  CHECK(default_c_RH_inv(35) == 10.5);
  CHECK(default_c_RH_inv(40) == 9);
  for (auto o : {Objective::Q1TwoRegime, Objective::K1, Objective::Q2, Objective::K2}) {
    CHECK(default_budget(o) >= 1000);
  }
  CHECK_NOTHROW(default_space(Objective::Q1TwoRegime, "high").validate());
  CHECK_NOTHROW(default_space(Objective::K1, "low").validate());
  CHECK(default_space(Objective::K1, "low").find("c_inv") != nullptr);
  CHECK(default_space(Objective::K1, "high").find("c_inv") == nullptr);
}

TEST_CASE("K2 at t0 = 500 does not lose to the printed value") {
  FixedInputs in;
  in.t0 = Height::value(500);
  OptimizeOptions opt;
  const OptimizationResult r = optimize(Objective::K2, in, opt, ctx());
  REQUIRE(r.feasible);
  CHECK(r.certificate.valid());
  CHECK(r.best_value <= 107.7 * 1.005);
  CHECK(r.evaluations <= default_budget(Objective::K2));
  CHECK(r.best_params.count("d1") == 1);
}

TEST_CASE("optimize is deterministic and certifies at the caller precision") {
  FixedInputs in;
  in.t0 = Height::H();
  OptimizeOptions opt;
  opt.seed = 5;
  const OptimizationResult a = optimize(Objective::K2, in, opt, ctx());
  const OptimizationResult b = optimize(Objective::K2, in, opt, ctx());
  CHECK(a.best_params == b.best_params);
  CHECK(a.best_value == b.best_value);
  CHECK(a.certificate.value->precision() == 128);
}

TEST_CASE("q1 with W below 1/c0 is infeasible") {
  FixedInputs in;
  in.W = 1;
  OptimizeOptions opt;
  const OptimizationResult r = optimize(Objective::Q1TwoRegime, in, opt, ctx());
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.infeasibility.empty());
  CHECK_FALSE(r.certificate.valid());
}

TEST_CASE("budgets below the floor are rejected") {
  FixedInputs in;
  OptimizeOptions opt;
  opt.budget = 999;
  CHECK_THROWS_AS(optimize(Objective::K2, in, opt, ctx()), DomainError);
  // two regimes of 8^3 grid points each do not fit in 1000
  opt.budget = 1000;
  CHECK_THROWS_AS(optimize(Objective::Q1TwoRegime, in, opt, ctx()), DomainError);
}

TEST_CASE("table reproduction guards its argument") {
  CHECK_THROWS_AS(reproduce_table(0, ctx()), DomainError);
  CHECK_THROWS_AS(reproduce_table(7, ctx()), DomainError);
}

TEST_CASE("Tables 1, 2 and 6 reproduce") {
  for (int n : {1, 2, 6}) {
    for (const auto& row : reproduce_table(n, ctx())) {
      CAPTURE(n);
      CAPTURE(row.row);
      CAPTURE(row.quantity);
      CHECK(row.ok());
    }
  }
}
