#include "barrier_cover/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bcov {

namespace {

constexpr double kPi = std::numbers::pi;

void require_lower_bound_domain(double alpha) {
  if (!(alpha > 0.0 && alpha <= kPi / 4.0 + 1e-15))
    throw std::domain_error("lower bound is defined for alpha in (0, pi/4]");
}

// 1 + r^2 + 2 r cos(2a), written as a sum of squares so it stays fully
// accurate when r ~ -cos(2a) makes the plain form cancel.
double radicand(double alpha, double r) {
  const double c2 = std::cos(2.0 * alpha), s2 = std::sin(2.0 * alpha);
  const double u = 1.0 + r * c2, v = r * s2;
  return u * u + v * v;
}

}  // namespace

double t_threshold(double alpha) {
  return std::atan((std::sin(3.0 * alpha) - std::sin(alpha)) /
                   (3.0 * std::cos(alpha) - std::cos(3.0 * alpha)));
}

HedgeParams hedge_params(double alpha, double beta) {
  HedgeParams p;
  const double ta = std::tan(alpha), tb = std::tan(beta);
  p.A = 2.0 * tb / (ta + tb);
  p.B = 2.0 * std::cos(2.0 * alpha);
  p.r0 = (2.0 * p.A - p.B) / (2.0 - p.A * p.B);
  p.t_alpha = t_threshold(alpha);
  return p;
}

double su_ratio(double alpha) {
  return alpha <= kPi / 4.0 ? 2.0 * std::cos(alpha) : 1.0 / std::sin(alpha);
}

double greedy_ratio(double alpha) {
  if (alpha <= kPi / 4.0) return 1.0 / std::cos(alpha);
  const double c = std::cos(alpha);
  return (1.0 + 2.0 * c * c) * std::sin(alpha);
}

double beta_hedge_cost(double alpha, double r, double beta) {
  const double ta = std::tan(alpha), tb = std::tan(beta);
  const double sum = ta + tb;
  return (ta + (1.0 + 2.0 * r) * tb) / (sum * sum * std::cos(beta));
}

double f1(double alpha, double beta, double r) {
  const double ta = std::tan(alpha), tb = std::tan(beta);
  const double A = 2.0 * tb / (ta + tb);
  return 2.0 * std::sin(alpha) / (std::cos(beta) * (ta + tb)) * (1.0 + A * r) /
         std::sqrt(radicand(alpha, r));
}

double f2(double alpha, double beta, double r) {
  const double ta = std::tan(alpha), tb = std::tan(beta);
  const double A = 2.0 * tb / (ta + tb);
  return (1.0 + A * r) / (std::cos(alpha) * std::cos(beta) * (ta + tb));
}

double g_second_derivative(double alpha, double beta, double r) {
  const HedgeParams p = hedge_params(alpha, beta);
  const double A = p.A, B = p.B;
  const double num = -4.0 * A * B + 3.0 * B * B - 4.0 +
                     (-A * B * B - 12.0 * A + 8.0 * B) * r +
                     (8.0 - 4.0 * A * B) * r * r;
  const double base = r * (B + r) + 1.0;
  return num / (4.0 * base * base * std::sqrt(base));
}

double beta0(double alpha) {
  if (alpha <= kPi / 6.0) return alpha;
  if (alpha >= kPi / 3.0) return 0.0;
  const double c4 = std::cos(4.0 * alpha), c6 = std::cos(6.0 * alpha);
  return 0.5 * std::acos((-2.0 * c4 + c6 + 2.0) / (3.0 - 2.0 * c4));
}

RatioReport beta_hedge_ratio(double alpha) {
  RatioReport rep;
  rep.alpha = alpha;
  rep.algorithm = Algo::BetaHedge;
  const double b0 = beta0(alpha);
  rep.beta = b0;
  // r0 needs no clamping: beta0 = alpha gives r0 = 1 exactly, beta0 = 0
  // gives r0 = -cos(2 alpha) exactly.
  rep.worst_r = hedge_params(alpha, b0).r0;
  if (alpha < kPi / 6.0)
    rep.ratio = 1.0 / std::cos(alpha);
  else if (alpha <= kPi / 3.0)
    rep.ratio = f1(alpha, b0, rep.worst_r);
  else
    rep.ratio = 1.0 / std::sin(alpha);
  return rep;
}

RatioReport su_report(double alpha) {
  return {alpha, Algo::StraightUp, std::nullopt, 0.0, su_ratio(alpha)};
}

RatioReport greedy_report(double alpha) {
  return {alpha, Algo::Greedy, std::nullopt, 1.0, greedy_ratio(alpha)};
}

double rho_threshold(double alpha, double s) {
  require_lower_bound_domain(alpha);
  // Rewritten via 1 - cos4a = 2 sin^2(2a) and
  // 2(1 + s^4) - 4 s^2 cos4a = 2(1 - s^2)^2 + 8 s^2 sin^2(2a): the naive
  // forms cancel catastrophically as alpha -> 0, where the result must
  // approach 1 from below at the ~alpha^6 scale.
  const double s2a = std::sin(2.0 * alpha);
  const double d = (1.0 - s) * (1.0 + s);
  return s * (1.0 + s) * std::sqrt(2.0) * s2a /
         std::sqrt(2.0 * d * d + 8.0 * (s * s2a) * (s * s2a));
}

double s_star(double alpha) {
  require_lower_bound_domain(alpha);
  const double c4 = std::cos(4.0 * alpha);
  const auto q = [c4](double s) {
    return ((s + 2.0 * c4) * s * s - 2.0) * s - 1.0;
  };
  double lo = 1.0, hi = 10.0;  // q(1) = 2(c4 - 1) <= 0, q(10) > 0
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double s_star_closed_form(double alpha) {
  require_lower_bound_domain(alpha);
  const double c4 = std::cos(4.0 * alpha);
  const double s2a = std::sin(2.0 * alpha);
  const double cbrt2 = std::cbrt(2.0);
  const double h = std::cbrt(
      -108.0 * c4 * c4 + 108.0 +
      std::sqrt(std::pow(108.0 - 108.0 * c4 * c4, 2) -
                4.0 * std::pow(12.0 * c4 - 12.0, 3)));
  const double inner =
      c4 * c4 - 8.0 * cbrt2 * s2a * s2a / h + h / (3.0 * cbrt2);
  const double root1 = std::sqrt(inner);
  const double root2 =
      std::sqrt(2.0 * c4 * c4 + 8.0 * cbrt2 * s2a * s2a / h +
                (16.0 - 8.0 * c4 * c4 * c4) / (4.0 * root1) -
                h / (3.0 * cbrt2));
  return -0.5 * c4 + 0.5 * root1 + 0.5 * root2;
}

double rho_star(double alpha) {
  return rho_threshold(alpha, s_star(alpha));
}

}  // namespace bcov
