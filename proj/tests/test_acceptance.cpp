// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, next to the check they gate.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "barrier_cover/adversary.hpp"
#include "barrier_cover/closed_form.hpp"
#include "barrier_cover/offline_opt.hpp"
#include "barrier_cover/online_algos.hpp"
#include "barrier_cover/rng.hpp"
#include "barrier_cover/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 4.0;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail
            << "\n";
  if (!ok) ++failures;
}

std::string num(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// --- 1: published ratio table ----------------------------------------------

void criterion_table() {
  struct Row {
    double denom;       // alpha = pi / denom
    double bh, su, gr;  // published cells
    int dp_bh, dp_su, dp_gr;
  };
  // Cells as printed, with their decimal places; each is compared within
  // max(0.001, one unit of its printed precision).
  const Row rows[] = {
      {2.5, 1.051, 1.051, 1.132, 3, 3, 3}, {3.0, 1.154, 1.154, 1.232, 3, 3, 3},
      {3.5, 1.231, 1.279, 1.389, 3, 3, 3}, {4.0, 1.2500, 1.414, 1.414, 4, 3, 3},
      {4.5, 1.2386, 1.532, 1.305, 4, 3, 3}, {5.0, 1.2139, 1.618, 1.23, 4, 3, 2},
      {5.5, 1.1844, 1.682, 1.188, 4, 3, 3}, {6.0, 1.154, 1.732, 1.154, 3, 3, 3},
      {8.0, 1.08, 1.847, 1.08, 2, 3, 2},
  };
  bool ok = true;
  std::string note = "26 cells match within printed precision";
  for (const Row& row : rows) {
    const double alpha = kPi / row.denom;
    const bool greedy_exception = row.denom == 3.0;
    const struct {
      double got, want;
      int dp;
      bool exception;
    } cells[] = {
        {bcov::beta_hedge_ratio(alpha).ratio, row.bh, row.dp_bh, false},
        {bcov::su_ratio(alpha), row.su, row.dp_su, false},
        {bcov::greedy_ratio(alpha), row.gr, row.dp_gr, greedy_exception},
    };
    for (const auto& cell : cells) {
      const double tol = std::max(0.001, std::pow(10.0, -cell.dp));
      const bool close = std::abs(cell.got - cell.want) <= tol;
      if (cell.exception) {
        // The formula must stand at ~1.299 and disagree with the table.
        if (close || std::abs(cell.got - 1.299038) > 1e-3) {
          ok = false;
          note = "greedy(pi/3) = " + num(cell.got) +
                 " fails to contradict the published 1.232 as required";
        }
      } else if (!close) {
        ok = false;
        note = "alpha = pi/" + num(row.denom, 3) + ": got " + num(cell.got) +
               ", published " + num(cell.want);
      }
    }
  }
  if (ok)
    note += "; greedy(pi/3) = " +
            num(bcov::greedy_ratio(kPi / 3.0), 7) +
            " correctly flags the published 1.232";
  report(1, ok, note);
}

// --- 2: beta-hedge pins at pi/4 ---------------------------------------------

void criterion_hedge_pins() {
  const double beta0_exact = -2.0 * std::atan(3.0 - std::sqrt(10.0));
  const bcov::RatioReport rep = bcov::beta_hedge_ratio(kQuarter);
  const auto [beta_hat, ratio_hat] = bcov::best_beta(kQuarter);
  const bool ok = std::abs(rep.ratio - 1.25) < 1e-9 &&
                  std::abs(ratio_hat - 1.25) < 1e-4 &&
                  std::abs(*rep.beta - beta0_exact) < 1e-9 &&
                  std::abs(beta_hat - beta0_exact) < 1e-4 &&
                  std::abs(rep.worst_r - 0.5) < 1e-4;
  report(2, ok,
         "ratio(pi/4) = " + num(rep.ratio) + " (grid " + num(ratio_hat) +
             "), beta0 = " + num(*rep.beta) + " (grid " + num(beta_hat) +
             "), worst r = " + num(rep.worst_r));
}

// --- 3: lower-bound pins at pi/4 --------------------------------------------

void criterion_lower_bound_pins() {
  const double silver = 1.0 + std::sqrt(2.0);
  const double rho = bcov::rho_star(kQuarter);
  const double s = bcov::s_star(kQuarter);
  const double empirical = bcov::min_success_rho({kQuarter}, silver);
  const bool ok = std::abs(rho - silver / 2.0) < 1e-12 &&
                  std::abs(s - silver) < 1e-10 &&
                  std::abs(empirical - silver / 2.0) < 1e-5;
  report(3, ok,
         "rho* = " + num(rho, 14) + ", s* = " + num(s, 14) +
             ", bisected min sustainable rho = " + num(empirical, 10));
}

// --- 4: simulation equals formulas ------------------------------------------

void criterion_simulation() {
  const double su = bcov::certify_sim_equals_formula(bcov::straight_up(), 0.6,
                                                     10000);
  const double gr = bcov::certify_sim_equals_formula(bcov::greedy(), kQuarter,
                                                     10000);
  const double bh = bcov::certify_sim_equals_formula(
      bcov::Policy{bcov::Algo::BetaHedge, std::nullopt}, 1.1, 10000);
  const bool ok = su < 1e-9 && gr < 1e-9 && bh < 1e-9;
  report(4, ok,
         "max |simulated - formula| over 10^4 trials each: straight-up " +
             num(su, 3) + ", greedy " + num(gr, 3) + ", beta-hedge " +
             num(bh, 3));
}

// --- 5: offline optimum oracle ----------------------------------------------

void criterion_opt_oracle() {
  bcov::Rng rng(bcov::seed_from_env());
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const double alpha = rng.uniform(1e-3, kPi / 2.0 - 1e-3);
    const double r = rng.uniform01();
    const bcov::GoodInstance inst = bcov::normalize({r, -1.0});
    worst = std::max(worst,
                     std::abs(bcov::opt_cost({alpha}, r).value -
                              bcov::opt_cost_geometric(inst, {alpha})));
  }
  double jump = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = kQuarter + (kQuarter - 2e-3) * i / 1000.0;
    const double r = -std::cos(2.0 * alpha);
    jump = std::max(jump,
                    std::abs(bcov::opt_cost({alpha}, r).value -
                             std::cos(alpha)));
  }
  const bool ok = worst < 1e-9 && jump < 1e-12;
  report(5, ok,
         "closed form vs geometric: max err " + num(worst, 3) +
             " over 10^5 pairs; branch seam max gap " + num(jump, 3));
}

// --- 6: f1/f2 boundary identity ---------------------------------------------

void criterion_boundary_identity() {
  bcov::Rng rng(bcov::seed_from_env());
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double alpha = rng.uniform(kQuarter, kPi / 2.0 - 1e-6);
    const double beta = rng.uniform(0.0, alpha);
    const double r = -std::cos(2.0 * alpha);
    worst = std::max(worst, std::abs(bcov::f1(alpha, beta, r) -
                                     bcov::f2(alpha, beta, r)));
  }
  report(6, worst < 1e-12,
         "max |f1 - f2| at r = -cos(2 alpha) over 10^4 samples: " +
             num(worst, 3));
}

// --- 7: analytic property suite ---------------------------------------------

void criterion_properties() {
  bcov::Rng rng(bcov::seed_from_env());
  bool ok = true;
  std::string note;

  double gmax = -1.0;
  for (int t = 0; t < 10000; ++t) {
    const double alpha = rng.uniform(1e-3, kPi / 2.0 - 1e-3);
    const double beta = rng.uniform(0.0, alpha);
    gmax = std::max(gmax, bcov::g_second_derivative(
                              alpha, beta, bcov::hedge_params(alpha, beta).r0));
  }
  if (gmax > 1e-12) {
    ok = false;
    note = "g''(r0) reached " + num(gmax);
  }

  double min_dd = std::numeric_limits<double>::infinity();
  for (double alpha : {kPi / 16.0, kPi / 8.0, kQuarter, kPi / 3.0, 1.4})
    min_dd = std::min(min_dd, bcov::certify_convexity(alpha));
  if (min_dd < 0.7) {
    ok = false;
    note = "f1 second difference dropped to " + num(min_dd);
  }

  double min_margin = 1.0;
  for (int i = 1; i <= 999; ++i) {
    const double alpha = kQuarter * i / 999.0;
    min_margin =
        std::min(min_margin, bcov::beta0(alpha) - bcov::t_threshold(alpha));
  }
  if (!(min_margin > 0.0)) {
    ok = false;
    note = "beta0 - t(alpha) bottomed at " + num(min_margin);
  }

  for (double alpha : {0.2, 0.5, kQuarter}) {
    const double t = bcov::t_threshold(alpha);
    if (!(bcov::hedge_params(alpha, t - 1e-7).r0 < 0.0 &&
          bcov::hedge_params(alpha, t + 1e-7).r0 > 0.0)) {
      ok = false;
      note = "r0 does not flip sign at t(" + num(alpha, 4) + ")";
    }
  }

  // Both ratios approach 1 as alpha -> 0 with the true gap shrinking like
  // alpha^6, far below double precision at the left end of the grid, so the
  // floor only asserts "no violation beyond fp noise".
  double lb_margin = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = kQuarter * i / 1000.0;
    lb_margin = std::min(lb_margin, bcov::beta_hedge_ratio(alpha).ratio -
                                        bcov::rho_star(alpha));
  }
  if (lb_margin < -1e-12) {
    ok = false;
    note = "rho* exceeded the beta-hedge ratio by " + num(-lb_margin);
  }

  if (ok)
    note = "g'' <= 0 (max " + num(gmax, 3) + "), convexity floor " +
           num(min_dd, 3) + ", beta0 > t (min margin " + num(min_margin, 3) +
           "), r0 flips at t, rho* <= hedge ratio (min margin " +
           num(lb_margin, 3) + ")";
  report(7, ok, note);
}

// --- 8: threshold sharpness ---------------------------------------------------

void criterion_sharpness() {
  bool ok = true;
  std::string note;
  for (double alpha : {kPi / 16.0, kPi / 8.0, 3.0 * kPi / 16.0, kQuarter}) {
    const bcov::HalfAngle a{alpha};
    const double s = bcov::s_star(alpha);
    const double rho = bcov::rho_star(alpha);
    const bcov::MaxHedgeOutcome above = bcov::max_hedge_run(a, s, rho + 1e-3, 200);
    if (above.status != bcov::MaxHedgeStatus::Succeeded) {
      ok = false;
      note = "run at rho* + 1e-3 did not survive for alpha = " + num(alpha, 4);
    }
    const bcov::MaxHedgeOutcome below = bcov::max_hedge_run(a, s, rho - 1e-3, 200);
    const auto dz = bcov::dead_zone_fixed_point(a, s, rho - 1e-3);
    if (below.status != bcov::MaxHedgeStatus::FailedAtRound && dz.has_value()) {
      ok = false;
      note = "rho* - 1e-3 neither fails nor diverges for alpha = " +
             num(alpha, 4);
    }
  }
  const auto dz = bcov::dead_zone_fixed_point({kQuarter}, 1.0 + std::sqrt(2.0),
                                              (1.0 + std::sqrt(2.0)) / 2.0);
  const bool pin = dz.has_value() && std::abs(*dz - 0.14644661) < 1e-6;
  if (!pin) {
    ok = false;
    note = dz ? "d_inf at tangency = " + num(*dz, 9) : "d_inf diverged";
  }
  if (ok)
    note = "success flips across rho* +- 1e-3 at all four angles; "
           "d_inf(pi/4) = " +
           num(*dz, 9);
  report(8, ok, note);
}

}  // namespace

int main() {
  criterion_table();
  criterion_hedge_pins();
  criterion_lower_bound_pins();
  criterion_simulation();
  criterion_opt_oracle();
  criterion_boundary_identity();
  criterion_properties();
  criterion_sharpness();
  if (failures == 0)
    std::cout << "acceptance: all 8 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
