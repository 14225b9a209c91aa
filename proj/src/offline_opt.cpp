#include "barrier_cover/offline_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bcov {

OptCost opt_cost(HalfAngle a, double r) {
  const double cos2a = std::cos(2.0 * a.alpha);
  if (a.alpha <= std::numbers::pi / 4.0 || r >= -cos2a) {
    const double cot = std::cos(a.alpha) / std::sin(a.alpha);
    const double v = 0.5 * std::hypot((1.0 + r) * cot, 1.0 - r);
    return {v, OptBranch::Apex};
  }
  return {std::cos(a.alpha), OptBranch::PerpendicularEdge};
}

double opt_cost_geometric(const GoodInstance& inst, HalfAngle a) {
  if (inst.trivial()) return 0.0;
  return dist({0.0, 0.0}, closest_point_on_cone({0.0, 0.0}, inst.span(), a));
}

double opt_cost_span(Interval iv, HalfAngle a) {
  const double left = -iv.l, right = iv.r;
  const double big = std::max(left, right);
  if (big == 0.0) return 0.0;
  const double r = std::min(left, right) / big;
  return big * opt_cost(a, r).value;
}

}  // namespace bcov
