#pragma once

#include <cstdint>
#include <limits>
#include <utility>

#include "barrier_cover/online_algos.hpp"
#include "barrier_cover/rng.hpp"

// Grid and brute-force oracles that certify the optimization claims behind
// the closed forms (worst adversarial r, optimal beta, convexity, and
// simulation/formula agreement) without trusting any of them.

namespace bcov {

// Search window for the grid optimizers. NaN bounds mean "derive from
// context" (the argument's natural domain). Each refinement pass re-grids a
// window of two steps around the incumbent, zooming 100x with the default
// point count.
struct GridSpec {
  double lo = std::numeric_limits<double>::quiet_NaN();
  double hi = std::numeric_limits<double>::quiet_NaN();
  int points = 201;
  int refine_rounds = 3;
};

// Argmax over r in [max(0, -cos 2a), 1] of the two-extreme hedge cost over
// the offline optimum; returns (r_hat, ratio_hat).
std::pair<double, double> worst_r(double alpha, double beta,
                                  GridSpec grid = {});

// Argmin over beta in [0, alpha] of worst_r's ratio; returns
// (beta_hat, ratio_hat). The closed-form beta0 must match within 1e-4.
std::pair<double, double> best_beta(double alpha, GridSpec grid = {});

// True iff the grid argmax of the ratio sits within 1e-4 of the formula's
// r0 (clamped into the admissible r range). Defined on the domain where r0
// is the analytic argmax: alpha <= pi/4 with beta in [t(alpha), alpha], or
// alpha >= pi/4 with beta in [0, alpha]; throws std::invalid_argument
// outside it.
bool certify_r0_is_argmax(double alpha, double beta);

// Minimum central second difference of beta -> f1(alpha, beta, r0) over
// beta in [0.01, alpha - 0.01] with step 1e-4 (the convexity certificate;
// +infinity when the range is empty). grid.lo/hi override the beta range.
double certify_convexity(double alpha, GridSpec grid = {});

// Max |simulated cost - governing closed form| over `trials` random
// instances: Straight-Up against cot(alpha), Greedy against the
// last-request-to-apex distance (alpha <= pi/4 only; throws outside), and
// BetaHedge against the two-extreme formula (random beta per trial unless
// the policy pins one).
double certify_sim_equals_formula(const Policy& policy, double alpha,
                                  int trials, std::uint64_t seed = kDefaultSeed);

}  // namespace bcov
