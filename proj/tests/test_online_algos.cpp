#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "barrier_cover/offline_opt.hpp"
#include "barrier_cover/online_algos.hpp"
#include "barrier_cover/rng.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 4.0;

// Random raw sequence mixing span extensions with deliberately redundant
// requests (which a good instance would drop but simulate must tolerate).
std::vector<double> random_requests(bcov::Rng& rng, int n) {
  std::vector<double> xs;
  double l = 0.0, r = 0.0;
  for (int i = 0; i < n; ++i) {
    if (l < r && rng.uniform01() < 0.3) {
      xs.push_back(rng.uniform(l, r));
    } else if (rng.uniform01() < 0.5) {
      l -= rng.uniform(0.01, 1.0);
      xs.push_back(l);
    } else {
      r += rng.uniform(0.01, 1.0);
      xs.push_back(r);
    }
  }
  return xs;
}

}  // namespace

TEST_CASE("straight-up climbs the y-axis to the covering height") {
  const bcov::HalfAngle a{kQuarter};
  const bcov::Trajectory traj =
      bcov::simulate(bcov::straight_up(), std::vector<double>{0.5, -1.0}, a);
  REQUIRE(traj.positions.size() == 3);
  CHECK(traj.positions[1].x == 0.0);
  CHECK(traj.positions[1].y == doctest::Approx(0.5));
  CHECK(traj.positions[2].y == doctest::Approx(1.0));
  CHECK(traj.cost == doctest::Approx(1.0));  // cot(pi/4) on a good instance
}

TEST_CASE("redundant requests cost nothing") {
  const bcov::HalfAngle a{kQuarter};
  const bcov::Trajectory traj =
      bcov::simulate(bcov::greedy(), std::vector<double>{1.0, 0.5, -0.25}, a);
  REQUIRE(traj.positions.size() == 4);
  CHECK(traj.positions[2].x == traj.positions[1].x);
  CHECK(traj.positions[2].y == traj.positions[1].y);
  // -0.25 extends the span, so it does force a move.
  CHECK(traj.positions[3].y > traj.positions[2].y);
}

TEST_CASE("every trajectory position covers the span so far") {
  bcov::Rng rng(7);
  const bcov::Policy policies[] = {bcov::straight_up(), bcov::greedy(),
                                   bcov::beta_hedge(0.15)};
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = rng.uniform(0.1, kQuarter);
    const bcov::HalfAngle a{alpha};
    const std::vector<double> xs = random_requests(rng, 6);
    for (const bcov::Policy& policy : policies) {
      bcov::Policy p = policy;
      if (p.kind == bcov::Algo::BetaHedge) p.beta = rng.uniform(0.0, alpha);
      const bcov::Trajectory traj = bcov::simulate(p, xs, a);
      double l = 0.0, r = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        l = std::min(l, xs[i]);
        r = std::max(r, xs[i]);
        CHECK(bcov::covers(traj.positions[i + 1], l, a));
        CHECK(bcov::covers(traj.positions[i + 1], r, a));
      }
    }
  }
}

TEST_CASE("beta = 0 reproduces straight-up pointwise") {
  bcov::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = rng.uniform(0.1, 1.4);
    const bcov::HalfAngle a{alpha};
    const std::vector<double> xs = random_requests(rng, 8);
    const bcov::Trajectory su = bcov::simulate(bcov::straight_up(), xs, a);
    const bcov::Trajectory bh = bcov::simulate(bcov::beta_hedge(0.0), xs, a);
    REQUIRE(su.positions.size() == bh.positions.size());
    for (std::size_t i = 0; i < su.positions.size(); ++i) {
      CHECK(std::abs(su.positions[i].x - bh.positions[i].x) < 1e-12);
      CHECK(std::abs(su.positions[i].y - bh.positions[i].y) < 1e-12);
    }
  }
}

TEST_CASE("beta = alpha reproduces greedy for alpha <= pi/4") {
  bcov::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = rng.uniform(0.1, kQuarter - 0.01);
    const bcov::HalfAngle a{alpha};
    const std::vector<double> xs = random_requests(rng, 8);
    const bcov::Trajectory gr = bcov::simulate(bcov::greedy(), xs, a);
    const bcov::Trajectory bh = bcov::simulate(bcov::beta_hedge(alpha), xs, a);
    CHECK(std::abs(gr.cost - bh.cost) < 1e-9);
    // Both chase the apex, so they agree pointwise as well.
    for (std::size_t i = 0; i < gr.positions.size(); ++i) {
      CHECK(std::abs(gr.positions[i].x - bh.positions[i].x) < 1e-9);
      CHECK(std::abs(gr.positions[i].y - bh.positions[i].y) < 1e-9);
    }
  }
}

TEST_CASE("policy validation") {
  const bcov::HalfAngle a{0.5};
  const std::vector<double> xs{1.0};
  CHECK_THROWS_AS(
      bcov::simulate(bcov::Policy{bcov::Algo::BetaHedge, std::nullopt}, xs, a),
      std::invalid_argument);
  CHECK_THROWS_AS(bcov::simulate(bcov::beta_hedge(0.6), xs, a),
                  std::invalid_argument);
  CHECK_THROWS_AS(bcov::simulate(bcov::beta_hedge(-0.1), xs, a),
                  std::invalid_argument);
  CHECK_THROWS_AS(bcov::worst_case_cost(bcov::greedy(), a, 1.5, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(bcov::worst_case_cost(bcov::greedy(), a, 0.5, 9),
                  std::invalid_argument);
}

TEST_CASE("brute-force worst cases hit the closed forms") {
  const bcov::HalfAngle quarter{kQuarter};

  // Straight-Up pays cot(alpha) whenever some request reaches the far extreme.
  CHECK(std::abs(bcov::worst_case_cost(bcov::straight_up(), quarter, 0.0, 4) -
                 1.0) < 1e-12);
  CHECK(std::abs(bcov::worst_case_cost(bcov::straight_up(), {0.6}, 0.7, 3) -
                 1.0 / std::tan(0.6)) < 1e-12);

  // Greedy's worst order at alpha = pi/4, r = 1 costs sqrt(2).
  CHECK(std::abs(bcov::worst_case_cost(bcov::greedy(), quarter, 1.0, 4) -
                 std::sqrt(2.0)) < 1e-9);

  // Wide angle: cos(a)(1 + 2 cos^2 a), attained by r then -1.
  const double wide = 3.0 * kPi / 8.0;
  CHECK(std::abs(bcov::worst_case_cost(bcov::greedy(), {wide}, 1.0, 4) -
                 std::cos(wide) * (1.0 + 2.0 * std::cos(wide) * std::cos(wide))) <
        1e-9);

  // beta-Hedge at the pinned worst case (pi/4, beta0, r = 1/2).
  const double b0 = std::atan(1.0 / 3.0);
  CHECK(std::abs(bcov::worst_case_cost(bcov::beta_hedge(b0), quarter, 0.5, 4) -
                 5.0 * std::sqrt(10.0) / 16.0) < 1e-9);

  // The brute force respects the proven ratio at sampled r.
  for (double r : {0.0, 0.3, 0.8, 1.0}) {
    const double cost = bcov::worst_case_cost(bcov::greedy(), quarter, r, 5);
    const double bound = bcov::greedy_ratio(kQuarter) *
                         bcov::opt_cost(quarter, r).value;
    CHECK(cost <= bound + 1e-9);
  }
}
