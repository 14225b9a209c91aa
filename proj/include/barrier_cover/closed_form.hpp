#pragma once

#include <optional>

// Analytic formulas for the coverage algorithms: competitive ratios of
// Straight-Up, Greedy and beta-Hedge, the hedge-analysis functions
// (A, B, r0, t, f1, f2, g''), the optimal hedge angle beta0(alpha), and the
// lower-bound constants rho*, s*.

namespace bcov {

enum class Algo { StraightUp, Greedy, BetaHedge };

// Abbreviations of the hedge analysis for fixed (alpha, beta):
//   A = 2 tan(beta) / (tan(alpha) + tan(beta)),  B = 2 cos(2 alpha),
//   r0 = (2A - B) / (2 - AB)   (the adversary's ratio-maximizing r),
//   t_alpha = threshold angle below which r0 becomes non-positive
//             (for alpha <= pi/4).
struct HedgeParams {
  double A = 0.0;
  double B = 0.0;
  double r0 = 0.0;
  double t_alpha = 0.0;
};

HedgeParams hedge_params(double alpha, double beta);

// t(alpha) = arctan((sin 3a - sin a) / (3 cos a - cos 3a)); r0(alpha, t(alpha))
// is exactly 0.
double t_threshold(double alpha);

struct RatioReport {
  double alpha = 0.0;
  Algo algorithm = Algo::StraightUp;
  std::optional<double> beta;  // only for BetaHedge
  double worst_r = 0.0;        // adversarial r attaining the ratio
  double ratio = 1.0;
};

// Competitive ratio of Straight-Up: 2 cos(a) for a <= pi/4, else 1/sin(a).
// Worst case at r = 0.
double su_ratio(double alpha);

// Competitive ratio of Greedy: 1/cos(a) for a <= pi/4, else
// (1 + 2 cos^2 a) sin(a). Worst case at r = 1.
double greedy_ratio(double alpha);

// Worst-case cost of beta-Hedge on the two-extreme instance (r, then -1):
// (tan a + (1 + 2r) tan b) / ((tan a + tan b)^2 cos b).
double beta_hedge_cost(double alpha, double r, double beta);

// Ratio function f1 = (2 sin a / (cos b (tan a + tan b))) (1 + A r) /
// sqrt(1 + r^2 + B r) and its edge-branch companion
// f2 = (1 + A r) / (cos a cos b (tan a + tan b)). They agree at r = -cos(2a).
double f1(double alpha, double beta, double r);
double f2(double alpha, double beta, double r);

// Second derivative in r of g(r) = (1 + A r)/sqrt(1 + r^2 + B r); g is
// concave at r = r0 for all alpha in [0, pi/2], beta in [0, alpha].
double g_second_derivative(double alpha, double beta, double r);

// Optimal hedge angle: alpha for a <= pi/6, 0 for a >= pi/3, and
// 1/2 arccos((-2 cos 4a + cos 6a + 2)/(3 - 2 cos 4a)) in between
// (continuous at both seams).
double beta0(double alpha);

// Competitive ratio of beta-Hedge at beta0: 1/cos(a) below pi/6,
// f1(a, beta0, r0) on [pi/6, pi/3], 1/sin(a) above pi/3. The report carries
// the adversarial worst r (r0, which the endpoint branches pin at 1 and
// -cos 2a respectively).
RatioReport beta_hedge_ratio(double alpha);

// Ratio reports for the other two policies (closed forms above).
RatioReport su_report(double alpha);
RatioReport greedy_report(double alpha);

// Smallest rho for which the adversary's geometric stream with growth s
// admits a budget-respecting response: s (1+s) sqrt(1 - cos 4a) /
// sqrt(2 (1 + s^4) - 4 s^2 cos 4a). Defined for alpha in (0, pi/4].
double rho_threshold(double alpha, double s);

// The adversary's optimal growth factor: unique root >= 1 of
// q(s) = s^4 + 2 s^3 cos(4a) - 2s - 1, by bisection on [1, 10] to 1e-12.
// Throws std::domain_error outside (0, pi/4].
double s_star(double alpha);

// Nested-radical closed form of the same root; numerically delicate as
// alpha -> 0 (its intermediate h -> 0), kept as a cross-check only.
double s_star_closed_form(double alpha);

// Lower bound on every deterministic algorithm: rho_threshold at s_star.
double rho_star(double alpha);

}  // namespace bcov
