#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "barrier_cover/closed_form.hpp"
#include "barrier_cover/verify.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 4.0;
}  // namespace

TEST_CASE("grid search recovers the worst r and the best beta") {
  const double b0 = std::atan(1.0 / 3.0);
  const auto [r_hat, ratio_hat] = bcov::worst_r(kQuarter, b0);
  CHECK(std::abs(r_hat - 0.5) < 1e-4);
  CHECK(std::abs(ratio_hat - 1.25) < 1e-6);

  const auto [beta_hat, best_ratio] = bcov::best_beta(kQuarter);
  CHECK(std::abs(beta_hat - b0) < 1e-4);
  CHECK(std::abs(best_ratio - 1.25) < 1e-5);
}

TEST_CASE("r0 is the grid argmax on its analytic domain") {
  CHECK(bcov::certify_r0_is_argmax(kQuarter, std::atan(1.0 / 3.0)));
  CHECK(bcov::certify_r0_is_argmax(kPi / 6.0, kPi / 6.0));
  CHECK(bcov::certify_r0_is_argmax(3.0 * kPi / 8.0, 0.2));
  // beta below t(alpha) with alpha < pi/4 is outside the certified domain.
  CHECK_THROWS_AS(bcov::certify_r0_is_argmax(0.3, 0.05),
                  std::invalid_argument);
}

TEST_CASE("f1 is convex in beta along r0") {
  CHECK(bcov::certify_convexity(kQuarter) >= 0.7);
  CHECK(bcov::certify_convexity(1.4) >= 0.7);
  // Degenerate range: nothing to refute.
  CHECK(std::isinf(bcov::certify_convexity(0.02)));
}

TEST_CASE("simulation agrees with the closed forms") {
  CHECK(bcov::certify_sim_equals_formula(bcov::straight_up(), 0.6, 2000) <
        1e-9);
  CHECK(bcov::certify_sim_equals_formula(bcov::greedy(), kQuarter, 2000) <
        1e-9);
  CHECK(bcov::certify_sim_equals_formula(bcov::greedy(), 0.3, 2000) < 1e-9);
  CHECK(bcov::certify_sim_equals_formula(
            bcov::Policy{bcov::Algo::BetaHedge, std::nullopt}, 1.1, 2000) <
        1e-9);
  CHECK(bcov::certify_sim_equals_formula(bcov::beta_hedge(0.2), 0.7, 2000) <
        1e-9);
  CHECK_THROWS_AS(bcov::certify_sim_equals_formula(bcov::greedy(), 1.0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(bcov::certify_sim_equals_formula(bcov::greedy(), 0.5, 0),
                  std::invalid_argument);
}
