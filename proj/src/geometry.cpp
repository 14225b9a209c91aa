#include "barrier_cover/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bcov {

double dist(Point a, Point b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool covers(Point p, double x, HalfAngle a) {
  return std::abs(x - p.x) <= p.y * std::tan(a.alpha) + kGeomEps;
}

Point apex(Interval iv, HalfAngle a) {
  if (iv.l == iv.r) return {iv.l, 0.0};
  const double cot = std::cos(a.alpha) / std::sin(a.alpha);
  return {(iv.l + iv.r) / 2.0, (iv.r - iv.l) / 2.0 * cot};
}

GoodInstance normalize(const std::vector<double>& raw) {
  GoodInstance inst;
  double l = 0.0, r = 0.0;
  for (double x : raw) {
    if (x < l || x > r) {  // keep only requests that strictly extend the span
      inst.xs.push_back(x);
      l = std::min(l, x);
      r = std::max(r, x);
    }
  }
  if (inst.xs.empty()) return inst;  // trivial: every request was at the origin

  if (-l < r) {  // flip so the larger extreme is negative; |l| == r stays put
    inst.flipped = true;
    for (double& x : inst.xs) x = -x;
    std::swap(l, r);
    l = -l;
    r = -r;
  }
  inst.scale = -l;
  for (double& x : inst.xs) x /= inst.scale;
  inst.leftmost = -1.0;
  inst.r = r / inst.scale;
  return inst;
}

Point closest_point_on_cone(Point from, Interval iv, HalfAngle a) {
  const double t = std::tan(a.alpha);
  const bool inside = from.x + from.y * t >= iv.r && from.x - from.y * t <= iv.l;
  if (inside) return from;

  const Point T = apex(iv, a);
  const double s = std::sin(a.alpha), c = std::cos(a.alpha);
  // Boundary rays from the apex: up-left along the edge anchored at (r, 0)
  // and up-right along the edge anchored at (l, 0).
  const Point dir[2] = {{-s, c}, {s, c}};
  Point best = T;
  double best_d = dist(from, T);
  for (const Point& d : dir) {
    const double u = (from.x - T.x) * d.x + (from.y - T.y) * d.y;
    if (u <= 0.0) continue;  // foot below the apex: the apex already covers it
    const Point q{T.x + u * d.x, T.y + u * d.y};
    const double dq = dist(from, q);
    if (dq < best_d) {
      best_d = dq;
      best = q;
    }
  }
  return best;
}

}  // namespace bcov
