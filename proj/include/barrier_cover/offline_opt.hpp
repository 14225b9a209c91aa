#pragma once

#include "barrier_cover/geometry.hpp"

// Optimal offline cost OPT(X; alpha) of covering a good instance from the
// origin, as a closed form in (alpha, r) and as a direct geometric
// computation; each validates the other.

namespace bcov {

// Which case of the offline optimum fired: the drone flies to the cone apex,
// or (for wide angles and small r) perpendicularly onto the cone edge.
enum class OptBranch { Apex, PerpendicularEdge };

struct OptCost {
  double value = 0.0;  // path length, > 0 for non-trivial instances
  OptBranch branch = OptBranch::Apex;
};

// Closed form: 1/2 sqrt((1+r)^2 cot^2(alpha) + (1-r)^2) when alpha <= pi/4 or
// r >= -cos(2 alpha), else cos(alpha). The case condition is the simplified
// form of (tan^2 a - 1)/(1 + tan^2 a); the equivalence is asserted in tests,
// not assumed.
OptCost opt_cost(HalfAngle a, double r);

// Independent oracle: |origin -> closest point of the cone of inst's span|,
// computed with the geometry module only. Trivial instances cost 0.
double opt_cost_geometric(const GoodInstance& inst, HalfAngle a);

// Offline optimum for a raw (un-normalized) span: normalize, apply the closed
// form, scale back. Used for per-round OPT in traces and the adversary's o_i.
double opt_cost_span(Interval iv, HalfAngle a);

}  // namespace bcov
