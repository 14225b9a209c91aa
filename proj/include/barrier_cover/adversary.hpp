#pragma once

#include <optional>
#include <vector>

#include "barrier_cover/geometry.hpp"
#include "barrier_cover/online_algos.hpp"

// Machinery behind the lower bound: the geometric adversarial request stream
// x_i = 2(-s)^(i-1), the MaxHedge response that spends exactly rho*(o_i -
// o_{i-1}) per round toward the next cone edge, the dead-zone fixed-point
// iteration, and the empirical minimal success ratio. All of it is defined
// for alpha in (0, pi/4].

namespace bcov {

// Alternating geometric request stream. Magnitudes grow by s > 1 per round.
struct AdversaryStream {
  double s = 2.0;
  int n = 0;

  std::vector<double> requests() const;  // x_i = 2(-s)^(i-1), i = 1..n
};

// Apex of the feasibility cone after the first i adversarial requests:
// T1 = (1, cot a), T_i = ((-s)^(i-2) (1-s), s^(i-2) (1+s) cot a) for i >= 2.
Point apex_T(double s, HalfAngle a, int i);

// Offline optimum o_i after i requests: o_1 = 1/sin(a) and o_i = s^(i-2) *
// sqrt((1+s)^2 cot^2(a) + (s-1)^2) for i >= 2 (everything scales by s).
double opt_o(double s, HalfAngle a, int i);

enum class MaxHedgeStatus { Succeeded, FailedAtRound, InvalidAtRound };

struct MaxHedgeRound {
  int round = 0;
  double z = 0.0;  // edge parameter: Z_i = T_i + z * (T_{i+1} - T_i)
  Point Z;         // raw coordinates (grow like s^i; may overflow for huge n)
};

struct MaxHedgeOutcome {
  MaxHedgeStatus status = MaxHedgeStatus::Succeeded;
  int round = 0;  // failing/invalid round; 0 when Succeeded
  std::vector<MaxHedgeRound> z_trace;
  std::vector<double> cost_trace;  // cumulative path length after each round
  std::vector<double> budgets;     // b_i = rho * (o_i - o_{i-1}), o_0 = 0
};

// Runs MaxHedge for n_rounds: Z_i is the farther intersection of the
// half-line from T_i toward T_{i+1} with the circle of radius b_i around
// Z_{i-1}. FailedAtRound when the circle cannot reach the half-line;
// InvalidAtRound when Z_i lands on the wrong side of the y-axis (reported,
// not repaired). Rounds >= 3 are computed in a frame rescaled by 1/s per
// round, where the recurrence is stationary, so long runs stay exact.
// z2_override replaces round 2 with a prescribed edge parameter (used to
// probe the dead-zone fixed point); its hop ignores the round-2 budget.
MaxHedgeOutcome max_hedge_run(HalfAngle a, double s, double rho, int n_rounds,
                              std::optional<double> z2_override = {});

// Detailed dead-zone iteration result. The sequence d_j parametrizes edge
// points below which no budget-respecting continuation survives j more
// rounds; its limit characterizes MaxHedge success.
enum class DeadZoneReason {
  Converged,    // |d_{j+1} - d_j| < 1e-12
  AxisBreach,   // d_j grew past 1/(1+s): every valid position is dead
  Unreachable,  // the budget circle missed the next edge (discriminant < 0)
  IterLimit,    // no verdict within max_iter (oscillating regime)
};

struct DeadZoneResult {
  std::optional<double> value;  // set iff Converged
  long iters = 0;
  DeadZoneReason reason = DeadZoneReason::Converged;
};

DeadZoneResult dead_zone_iterate(HalfAngle a, double s, double rho,
                                 long max_iter = 4000000);

// The fixed point d_inf, or nullopt on any form of divergence.
std::optional<double> dead_zone_fixed_point(HalfAngle a, double s, double rho,
                                            long max_iter = 4000000);

// Smallest rho in [1, 2] at which the adversary with growth s admits a
// sustainable response, by bisection to 1e-8. Matches
// s(1+s)sqrt(1-cos 4a)/sqrt(2(1+s^4)-4s^2 cos 4a) (Theorem 5's bound).
double min_success_rho(HalfAngle a, double s);

// Diagnostic from the lower-bound proof: an algorithm is cautious in round i
// if its position P_i stays within the closed disk around Z_{i-1} of radius
// |Z_{i-1} Z_i|, and aggressive otherwise. Classifies as many rounds as both
// the outcome and the trajectory cover.
enum class Stance { Cautious, Aggressive };
std::vector<Stance> classify_stances(const MaxHedgeOutcome& outcome,
                                     const Trajectory& traj);

}  // namespace bcov
