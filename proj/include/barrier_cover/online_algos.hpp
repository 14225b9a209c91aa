#pragma once

#include <optional>
#include <vector>

#include "barrier_cover/closed_form.hpp"
#include "barrier_cover/geometry.hpp"

// Round-by-round simulation of the three online policies. Each round the
// drone sees one more request and moves per policy; the trajectory's length
// is the algorithm's net cost.

namespace bcov {

struct Trajectory {
  std::vector<Point> positions;  // P0 = (0,0) first, one more entry per round
  double cost = 0.0;             // sum of consecutive segment lengths
};

// Which policy to run; beta is required for BetaHedge (0 <= beta <= alpha,
// checked at simulation time) and ignored otherwise.
struct Policy {
  Algo kind = Algo::StraightUp;
  std::optional<double> beta;
};

Policy straight_up();
Policy greedy();
Policy beta_hedge(double beta);

// Simulate on a raw request sequence. Redundant requests (inside the running
// span) cause no movement and no cost, so adversarial traces can be replayed
// verbatim; every round appends a position, moved or not.
Trajectory simulate(const Policy& policy, const std::vector<double>& xs,
                    HalfAngle a);

// Convenience overload for pre-normalized instances.
Trajectory simulate(const Policy& policy, const GoodInstance& inst,
                    HalfAngle a);

// Brute-force worst case: max simulated cost over all good request sequences
// of length <= depth with coordinates drawn from {-1, r} plus a 5-point
// interior grid. Certifies the closed forms' worst-case arrival orders.
// depth is capped at 8 (the paper's worst cases have length <= 2).
double worst_case_cost(const Policy& policy, HalfAngle a, double r, int depth);

}  // namespace bcov
