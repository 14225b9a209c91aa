#include "barrier_cover/online_algos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcov {

namespace {

// One policy move: the drone at p sees the extreme request x (already merged
// into span). Assumes p covers the previous span.
Point policy_step(const Policy& policy, HalfAngle a, Point p, Interval span,
                  double x) {
  switch (policy.kind) {
    case Algo::StraightUp:
      // Lowest point of the feasibility cone on the y-axis. The covering
      // height only grows as the span extends, so this never moves down.
      return {0.0, std::max(-span.l, span.r) / std::tan(a.alpha)};
    case Algo::Greedy:
      return closest_point_on_cone(p, span, a);
    case Algo::BetaHedge:
      break;
  }
  // BetaHedge: if the new request is already visible, stay. Otherwise travel
  // at angle beta to the vertical, tilted toward the request, until the
  // request enters the field of view -- i.e. until the cone edge on which
  // its coverage constraint is tight. Tilting at beta <= alpha can only
  // improve the other side's margin, so feasibility is preserved.
  if (covers(p, x, a)) return p;
  const double beta = *policy.beta;
  const double ta = std::tan(a.alpha);
  const double sb = std::sin(beta), cb = std::cos(beta);
  const double denom = sb + cb * ta;
  double u;
  Point dir;
  if (x <= span.l) {
    // New leftmost: stop where p.x - p.y tan(alpha) = x.
    u = (p.x - p.y * ta - x) / denom;
    dir = {-sb, cb};
  } else {
    // New rightmost: stop where p.x + p.y tan(alpha) = x.
    u = (x - p.x - p.y * ta) / denom;
    dir = {sb, cb};
  }
  if (u < -kGeomEps)
    throw std::logic_error(
        "beta-hedge ray missed the cone edge from a feasible position");
  u = std::max(u, 0.0);
  return {p.x + u * dir.x, p.y + u * dir.y};
}

void validate_policy(const Policy& policy, HalfAngle a) {
  if (policy.kind != Algo::BetaHedge) return;
  if (!policy.beta)
    throw std::invalid_argument("beta-hedge policy needs a beta angle");
  if (!(*policy.beta >= 0.0 && *policy.beta <= a.alpha))
    throw std::invalid_argument("beta must lie in [0, alpha]");
}

}  // namespace

Policy straight_up() { return {Algo::StraightUp, std::nullopt}; }
Policy greedy() { return {Algo::Greedy, std::nullopt}; }
Policy beta_hedge(double beta) { return {Algo::BetaHedge, beta}; }

Trajectory simulate(const Policy& policy, const std::vector<double>& xs,
                    HalfAngle a) {
  validate_policy(policy, a);
  Trajectory traj;
  traj.positions.push_back({0.0, 0.0});
  Interval span;
  Point p{0.0, 0.0};
  for (double x : xs) {
    if (x >= span.l && x <= span.r) {
      // Redundant: the drone already covers it; no move, no cost.
      traj.positions.push_back(p);
      continue;
    }
    span.l = std::min(span.l, x);
    span.r = std::max(span.r, x);
    p = policy_step(policy, a, p, span, x);
    traj.positions.push_back(p);
  }
  traj.cost = 0.0;
  for (std::size_t i = 1; i < traj.positions.size(); ++i)
    traj.cost += dist(traj.positions[i - 1], traj.positions[i]);
  return traj;
}

Trajectory simulate(const Policy& policy, const GoodInstance& inst,
                    HalfAngle a) {
  return simulate(policy, inst.xs, a);
}

namespace {

void worst_case_dfs(const Policy& policy, HalfAngle a,
                    const std::vector<double>& candidates, Interval span,
                    Point p, double cost, int remaining, double& best) {
  best = std::max(best, cost);
  if (remaining == 0) return;
  for (double c : candidates) {
    if (c >= span.l - 1e-12 && c <= span.r + 1e-12) continue;  // not extending
    Interval next{std::min(span.l, c), std::max(span.r, c)};
    const Point q = policy_step(policy, a, p, next, c);
    worst_case_dfs(policy, a, candidates, next, q, cost + dist(p, q),
                   remaining - 1, best);
  }
}

}  // namespace

double worst_case_cost(const Policy& policy, HalfAngle a, double r,
                       int depth) {
  validate_policy(policy, a);
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("worst_case_cost needs r in [0, 1]");
  if (depth < 0 || depth > 8)
    throw std::invalid_argument("worst_case_cost depth is capped at 8");
  std::vector<double> candidates{-1.0, r};
  for (int k = 1; k <= 5; ++k)
    candidates.push_back(-1.0 + k * (r + 1.0) / 6.0);
  double best = 0.0;
  worst_case_dfs(policy, a, candidates, Interval{}, Point{0.0, 0.0}, 0.0,
                 depth, best);
  return best;
}

}  // namespace bcov
