#pragma once

#include <vector>

// Planar primitives for the drone barrier-coverage problem: requests live on
// the x-axis, the drone flies in the upper half-plane, and a drone at height h
// covers the ground segment of half-length h*tan(alpha).

namespace bcov {

// Absolute tolerance for geometric predicates. All coordinates are O(1) after
// normalization, so an absolute epsilon is safe.
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;  // drone height, >= 0
};

double dist(Point a, Point b);

// Half angle-of-view, strictly inside (0, pi/2). At 0 the feasibility cone
// degenerates to a ray (cot alpha -> inf) and at pi/2 coverage is total, so
// the endpoints are treated as limits only.
struct HalfAngle {
  double alpha;  // radians
};

// Span of the requests seen so far. The origin request X0 = (0,0) is always
// present, hence l <= 0 <= r.
struct Interval {
  double l = 0.0;
  double r = 0.0;
};

// A request sequence with no redundant requests, scaled and possibly flipped
// so that the leftmost coordinate is -1 and dominates the rightmost
// (r in [0, 1]). `scale` maps normalized lengths back to raw units.
struct GoodInstance {
  std::vector<double> xs;   // surviving requests, arrival order, X0 = 0 implicit
  double leftmost = 0.0;    // -1 for non-trivial instances
  double r = 0.0;           // rightmost coordinate, in [0, 1]
  double scale = 1.0;       // raw cost = normalized cost * scale
  bool flipped = false;

  bool trivial() const { return xs.empty(); }
  Interval span() const { return {leftmost, r}; }
};

// True iff a drone at p covers the ground point x: |x - p.x| <= p.y tan(alpha),
// compared with absolute tolerance kGeomEps.
bool covers(Point p, double x, HalfAngle a);

// Apex of the feasibility cone of the span [l, r]: the lowest drone position
// covering the whole interval, ((l+r)/2, ((r-l)/2) cot(alpha)).
Point apex(Interval iv, HalfAngle a);

// Drops redundant requests (those inside the running span), flips so the
// larger-magnitude extreme is negative (ties: no flip), and scales that
// extreme to -1. All-zero input yields the trivial empty instance.
GoodInstance normalize(const std::vector<double>& raw);

// Euclidean-nearest point of the feasibility cone of [l, r] to `from`:
// `from` itself when already inside, otherwise the closer of the two
// boundary-ray projections (which degenerates to the apex when both feet
// fall below it).
Point closest_point_on_cone(Point from, Interval iv, HalfAngle a);

}  // namespace bcov
