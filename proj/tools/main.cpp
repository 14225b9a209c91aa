// barrier-cover: command-line front end for the barrier-coverage library.
// Subcommands: ratio, sweep, simulate, lowerbound, verify, table1,
// figure2-data. Exit codes: 0 success, 1 verification failure, 2 usage or
// domain error, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "barrier_cover/adversary.hpp"
#include "barrier_cover/closed_form.hpp"
#include "barrier_cover/offline_opt.hpp"
#include "barrier_cover/online_algos.hpp"
#include "barrier_cover/rng.hpp"
#include "barrier_cover/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Angles are accepted as decimal radians or as "pi/N" with decimal N,
// matching the paper's row labels (pi/4, pi/5.5, ...).
std::optional<double> parse_angle(const std::string& text) {
  std::string body = text;
  double scale = 1.0;
  if (body.rfind("pi/", 0) == 0) {
    body = body.substr(3);
    scale = kPi;
  } else if (body == "pi") {
    return kPi;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(body, &used);
    if (used != body.size()) return std::nullopt;
    return scale == 1.0 ? v : scale / v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

double require_alpha(const std::string& text, bool lower_bound_domain = false) {
  const auto v = parse_angle(text);
  if (!v) throw CLI::ValidationError("alpha", "cannot parse angle '" + text + "'");
  const double hi = lower_bound_domain ? kPi / 4.0 + 1e-15 : kPi / 2.0 - 1e-4;
  if (!(*v >= 1e-4 && *v <= hi)) {
    std::ostringstream msg;
    msg << "alpha = " << *v << " outside [1e-4, "
        << (lower_bound_domain ? "pi/4]" : "pi/2 - 1e-4]");
    throw std::domain_error(msg.str());
  }
  return *v;
}

std::string fmt(double v, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

bcov::Algo parse_alg(const std::string& name) {
  if (name == "straight-up") return bcov::Algo::StraightUp;
  if (name == "greedy") return bcov::Algo::Greedy;
  if (name == "beta-hedge") return bcov::Algo::BetaHedge;
  throw CLI::ValidationError("alg", "unknown algorithm '" + name + "'");
}

// ---- ratio ----------------------------------------------------------------

int cmd_ratio(const std::string& alpha_text, const std::string& alg_name,
              const std::optional<std::string>& beta_text, int precision) {
  const double alpha = require_alpha(alpha_text);
  const bcov::Algo alg = parse_alg(alg_name);
  bcov::RatioReport rep;
  if (alg == bcov::Algo::StraightUp) {
    rep = bcov::su_report(alpha);
  } else if (alg == bcov::Algo::Greedy) {
    rep = bcov::greedy_report(alpha);
  } else if (!beta_text) {
    rep = bcov::beta_hedge_ratio(alpha);
  } else {
    const auto beta = parse_angle(*beta_text);
    if (!beta || !(*beta >= 0.0 && *beta <= alpha))
      throw std::domain_error("beta must lie in [0, alpha]");
    const auto [r_hat, ratio_hat] = bcov::worst_r(alpha, *beta);
    rep = {alpha, alg, *beta, r_hat, ratio_hat};
  }
  std::cout << "alg=" << alg_name << " alpha=" << fmt(rep.alpha, precision);
  if (rep.beta) std::cout << " beta=" << fmt(*rep.beta, precision);
  std::cout << " worst_r=" << fmt(rep.worst_r, precision)
            << " ratio=" << fmt(rep.ratio, precision) << "\n";
  return 0;
}

// ---- sweep / figure2-data -------------------------------------------------

struct SweepRow {
  double alpha, su, greedy, b0, bh;
  std::optional<double> rho, s;
};

SweepRow sweep_row(double alpha) {
  SweepRow row{alpha,
               bcov::su_ratio(alpha),
               bcov::greedy_ratio(alpha),
               bcov::beta0(alpha),
               bcov::beta_hedge_ratio(alpha).ratio,
               std::nullopt,
               std::nullopt};
  if (alpha <= kPi / 4.0 + 1e-15) {
    row.s = bcov::s_star(alpha);
    row.rho = bcov::rho_threshold(alpha, *row.s);
  }
  return row;
}

int emit_sweep(const std::vector<double>& alphas, const std::string& format,
               const std::string& out_path, int precision) {
  std::ostringstream body;
  if (format == "csv") {
    body << "alpha,su_ratio,greedy_ratio,beta0,beta_hedge_ratio,rho_star,s_star\n";
    for (double a : alphas) {
      const SweepRow row = sweep_row(a);
      body << fmt(row.alpha, precision) << ',' << fmt(row.su, precision) << ','
           << fmt(row.greedy, precision) << ',' << fmt(row.b0, precision)
           << ',' << fmt(row.bh, precision) << ','
           << (row.rho ? fmt(*row.rho, precision) : "") << ','
           << (row.s ? fmt(*row.s, precision) : "") << "\n";
    }
  } else {
    for (double a : alphas) {
      const SweepRow row = sweep_row(a);
      nlohmann::json j{{"alpha", row.alpha},
                       {"su_ratio", row.su},
                       {"greedy_ratio", row.greedy},
                       {"beta0", row.b0},
                       {"beta_hedge_ratio", row.bh},
                       {"rho_star", nullptr},
                       {"s_star", nullptr}};
      if (row.rho) j["rho_star"] = *row.rho;
      if (row.s) j["s_star"] = *row.s;
      body << j.dump() << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << body.str();
    return 0;
  }
  std::ofstream out(out_path);
  if (!out || !(out << body.str())) {
    std::cerr << "cannot write " << out_path << "\n";
    return 3;
  }
  return 0;
}

int cmd_sweep(const std::string& lo_text, const std::string& hi_text,
              int steps, const std::string& format,
              const std::string& out_path, int precision) {
  const double lo = require_alpha(lo_text), hi = require_alpha(hi_text);
  if (!(lo < hi) || steps < 2)
    throw std::domain_error("sweep needs alpha-lo < alpha-hi and steps >= 2");
  std::vector<double> alphas;
  for (int i = 0; i < steps; ++i)
    alphas.push_back(lo + (hi - lo) * i / (steps - 1));
  return emit_sweep(alphas, format, out_path, precision);
}

// ---- simulate ---------------------------------------------------------------

int cmd_simulate(const std::string& file, const std::string& alpha_text,
                 const std::string& alg_name,
                 const std::optional<std::string>& beta_text, int precision) {
  const double alpha = require_alpha(alpha_text);
  const bcov::Algo alg = parse_alg(alg_name);
  bcov::Policy policy{alg, std::nullopt};
  if (alg == bcov::Algo::BetaHedge) {
    if (beta_text) {
      const auto beta = parse_angle(*beta_text);
      if (!beta) throw std::domain_error("cannot parse beta");
      policy.beta = *beta;
    } else {
      policy.beta = bcov::beta0(alpha);
    }
  }

  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 3;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (!doc.is_array()) throw std::runtime_error("expected a JSON array");
    for (const auto& item : doc)
      if (!item.is_number())
        throw std::runtime_error("expected an array of numbers");
  } catch (const std::exception& e) {
    // nlohmann's parse errors already carry "at line L, column C".
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }
  const std::vector<double> xs = doc.get<std::vector<double>>();

  const bcov::HalfAngle a{alpha};
  const bcov::Trajectory traj = bcov::simulate(policy, xs, a);
  bcov::Interval span;
  double cum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    span.l = std::min(span.l, xs[i]);
    span.r = std::max(span.r, xs[i]);
    const double step = bcov::dist(traj.positions[i], traj.positions[i + 1]);
    cum += step;
    const double opt = bcov::opt_cost_span(span, a);
    nlohmann::json rec{{"round", i + 1},
                       {"request_x", xs[i]},
                       {"position",
                        {{"x", traj.positions[i + 1].x},
                         {"y", traj.positions[i + 1].y}}},
                       {"step_cost", step},
                       {"cum_cost", cum},
                       {"opt_cost_so_far", opt},
                       {"ratio_so_far", nullptr}};
    if (opt > 0.0) rec["ratio_so_far"] = cum / opt;
    std::cout << rec.dump() << "\n";
  }
  (void)precision;
  return 0;
}

// ---- lowerbound -------------------------------------------------------------

int cmd_lowerbound(const std::string& alpha_text,
                   const std::optional<std::string>& s_text,
                   const std::optional<std::string>& rho_text, int rounds,
                   bool trace, int precision) {
  const double alpha = require_alpha(alpha_text, /*lower_bound_domain=*/true);
  const bcov::HalfAngle a{alpha};
  const double sstar = bcov::s_star(alpha);
  const double rstar = bcov::rho_star(alpha);
  const double s = s_text ? std::stod(*s_text) : sstar;
  const double rho = rho_text ? std::stod(*rho_text) : rstar;
  if (!(s > 1.0)) throw std::domain_error("s must be > 1");

  std::cout << "rho_star=" << fmt(rstar, precision)
            << " s_star=" << fmt(sstar, precision) << "\n";
  const double bisect = bcov::min_success_rho(a, s);
  std::cout << "min_success_rho(s=" << fmt(s, precision)
            << ")=" << fmt(bisect, precision)
            << " threshold=" << fmt(bcov::rho_threshold(alpha, s), precision)
            << "\n";

  const bcov::MaxHedgeOutcome run = bcov::max_hedge_run(a, s, rho, rounds);
  std::cout << "maxhedge(s=" << fmt(s, precision)
            << ", rho=" << fmt(rho, precision) << ", rounds=" << rounds
            << "): ";
  switch (run.status) {
    case bcov::MaxHedgeStatus::Succeeded:
      std::cout << "succeeded\n";
      break;
    case bcov::MaxHedgeStatus::FailedAtRound:
      std::cout << "failed at round " << run.round << "\n";
      break;
    case bcov::MaxHedgeStatus::InvalidAtRound:
      std::cout << "crossed the y-axis at round " << run.round << "\n";
      break;
  }
  if (trace) {
    for (const auto& r : run.z_trace)
      std::cout << "round=" << r.round << " z=" << fmt(r.z, precision)
                << " Z=(" << fmt(r.Z.x, precision) << ", "
                << fmt(r.Z.y, precision) << ")\n";
  }
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct CheckRunner {
  int failures = 0;

  void run(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    failures += ok ? 0 : 1;
  }

  void close(const std::string& name, double got, double want, double tol) {
    std::ostringstream detail;
    detail << "got " << std::setprecision(12) << got << ", want " << want
           << " +- " << tol;
    run(name, std::abs(got - want) <= tol, detail.str());
  }
};

void verify_opt(CheckRunner& cr, std::uint64_t seed) {
  bcov::Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const double alpha = rng.uniform(1e-3, kPi / 2.0 - 1e-3);
    const double r = rng.uniform01();
    std::vector<double> raw{r, -1.0};
    if (rng.uniform01() < 0.5) std::swap(raw[0], raw[1]);
    const bcov::GoodInstance inst = bcov::normalize(raw);
    const double closed = bcov::opt_cost(bcov::HalfAngle{alpha}, r).value;
    const double geo = bcov::opt_cost_geometric(inst, bcov::HalfAngle{alpha});
    worst = std::max(worst, std::abs(closed - geo));
  }
  cr.run("opt-closed-vs-geometric", worst < 1e-9,
         "max err " + std::to_string(worst));

  double jump = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = kPi / 4.0 + (kPi / 4.0 - 2e-3) * i / 1000.0;
    const double r = -std::cos(2.0 * alpha);
    const bcov::OptCost at = bcov::opt_cost(bcov::HalfAngle{alpha}, r);
    jump = std::max(jump, std::abs(at.value - std::cos(alpha)));
  }
  cr.run("opt-branch-continuity", jump < 1e-12,
         "max jump " + std::to_string(jump));
}

void verify_sim(CheckRunner& cr, std::uint64_t seed) {
  const double quarter = kPi / 4.0;
  double e = bcov::certify_sim_equals_formula(bcov::straight_up(), 0.6, 10000,
                                              seed);
  cr.run("sim-straight-up", e < 1e-9, "max err " + std::to_string(e));
  e = bcov::certify_sim_equals_formula(bcov::greedy(), quarter, 10000, seed);
  cr.run("sim-greedy-telescoping", e < 1e-9, "max err " + std::to_string(e));
  e = bcov::certify_sim_equals_formula(bcov::Policy{bcov::Algo::BetaHedge, {}},
                                       1.1, 10000, seed);
  cr.run("sim-beta-hedge-lemma4", e < 1e-9, "max err " + std::to_string(e));

  // Endpoint reductions of the hedge family.
  bcov::Rng rng(seed);
  double gap = 0.0;
  for (int t = 0; t < 200; ++t) {
    const double alpha = rng.uniform(0.1, quarter);
    const double r = rng.uniform01();
    std::vector<double> xs{r, -1.0};
    const bcov::HalfAngle a{alpha};
    const double su = bcov::simulate(bcov::straight_up(), xs, a).cost;
    const double bh0 = bcov::simulate(bcov::beta_hedge(0.0), xs, a).cost;
    const double gr = bcov::simulate(bcov::greedy(), xs, a).cost;
    const double bha = bcov::simulate(bcov::beta_hedge(alpha), xs, a).cost;
    gap = std::max({gap, std::abs(su - bh0), std::abs(gr - bha)});
  }
  cr.run("sim-hedge-endpoints", gap < 1e-9, "max gap " + std::to_string(gap));
}

void verify_analysis(CheckRunner& cr, std::uint64_t seed) {
  bcov::Rng rng(seed);
  const double quarter = kPi / 4.0;

  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double alpha = rng.uniform(quarter, kPi / 2.0 - 1e-6);
    const double beta = rng.uniform(0.0, alpha);
    const double r = -std::cos(2.0 * alpha);
    worst = std::max(worst, std::abs(bcov::f1(alpha, beta, r) -
                                     bcov::f2(alpha, beta, r)));
  }
  cr.run("f1-f2-boundary-identity", worst < 1e-12,
         "max err " + std::to_string(worst));

  double gmax = -1.0;
  for (int t = 0; t < 10000; ++t) {
    const double alpha = rng.uniform(1e-3, kPi / 2.0 - 1e-3);
    const double beta = rng.uniform(0.0, alpha);
    const bcov::HedgeParams p = bcov::hedge_params(alpha, beta);
    gmax = std::max(gmax, bcov::g_second_derivative(alpha, beta, p.r0));
  }
  cr.run("g-concave-at-r0", gmax <= 1e-12, "max g'' " + std::to_string(gmax));

  double min_margin = 1.0;
  for (int i = 1; i <= 999; ++i) {
    const double alpha = quarter * i / 999.0;
    min_margin = std::min(
        min_margin, bcov::beta0(alpha) - bcov::t_threshold(alpha));
  }
  cr.run("beta0-above-t", min_margin > 0.0,
         "min margin " + std::to_string(min_margin));

  bool flip_ok = true;
  for (double alpha : {0.2, 0.5, quarter}) {
    const double t = bcov::t_threshold(alpha);
    flip_ok = flip_ok && bcov::hedge_params(alpha, t - 1e-7).r0 < 0.0 &&
              bcov::hedge_params(alpha, t + 1e-7).r0 > 0.0;
  }
  cr.run("r0-sign-flip-at-t", flip_ok);

  double min_dd = std::numeric_limits<double>::infinity();
  for (double alpha : {kPi / 16.0, kPi / 8.0, quarter, kPi / 3.0, 1.4})
    min_dd = std::min(min_dd, bcov::certify_convexity(alpha));
  cr.run("f1-convex-in-beta", min_dd >= 0.7,
         "min second difference " + std::to_string(min_dd));

  bool grid_ok = true;
  for (double alpha : {quarter, kPi / 3.5, kPi / 5.0}) {
    const auto [bhat, rhat] = bcov::best_beta(alpha);
    const bcov::RatioReport rep = bcov::beta_hedge_ratio(alpha);
    grid_ok = grid_ok && std::abs(bhat - bcov::beta0(alpha)) < 1e-4 &&
              std::abs(rhat - rep.ratio) < 1e-6;
  }
  cr.run("best-beta-matches-beta0", grid_ok);

  bool argmax_ok = true;
  for (const auto& [alpha, beta] :
       {std::pair{quarter, bcov::beta0(quarter)}, {kPi / 6.0, kPi / 6.0},
        {3.0 * kPi / 8.0, 0.2}})
    argmax_ok = argmax_ok && bcov::certify_r0_is_argmax(alpha, beta);
  cr.run("worst-r-matches-r0", argmax_ok);

  // The true gap shrinks like alpha^6 as alpha -> 0, so the floor only
  // asserts "no violation beyond fp noise" at the left end of the grid.
  double lb_margin = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = quarter * i / 1000.0;
    lb_margin = std::min(lb_margin, bcov::beta_hedge_ratio(alpha).ratio -
                                        bcov::rho_star(alpha));
  }
  cr.run("rho-star-below-hedge-ratio", lb_margin >= -1e-12,
         "min margin " + std::to_string(lb_margin));
}

void verify_lowerbound(CheckRunner& cr) {
  const double quarter = kPi / 4.0;
  double qres = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double alpha = quarter * i / 200.0;
    const double s = bcov::s_star(alpha);
    const double c4 = std::cos(4.0 * alpha);
    qres = std::max(qres,
                    std::abs(((s + 2.0 * c4) * s * s - 2.0) * s - 1.0));
    qres = std::max(qres, std::abs(s - bcov::s_star_closed_form(alpha)));
  }
  cr.run("s-star-quartic-and-radical", qres < 1e-9,
         "max residual " + std::to_string(qres));

  cr.close("rho-star-pin", bcov::rho_star(quarter),
           (1.0 + std::sqrt(2.0)) / 2.0, 1e-12);

  const bcov::HalfAngle a{quarter};
  const double s = 1.0 + std::sqrt(2.0);
  cr.close("min-success-rho-pin", bcov::min_success_rho(a, s),
           bcov::rho_star(quarter), 1e-6);
  cr.close("min-success-rho-s2", bcov::min_success_rho(a, 2.0), 1.2, 1e-6);

  const auto dz = bcov::dead_zone_fixed_point(a, s, bcov::rho_star(quarter));
  cr.run("dead-zone-pin", dz && std::abs(*dz - 0.14644661) < 1e-6,
         dz ? "got " + std::to_string(*dz) : "diverged");

  bool sharp = true;
  for (double alpha : {kPi / 16.0, kPi / 8.0, 3.0 * kPi / 16.0, quarter}) {
    const bcov::HalfAngle aa{alpha};
    const double ss = bcov::s_star(alpha);
    const double rr = bcov::rho_star(alpha);
    const auto above = bcov::max_hedge_run(aa, ss, rr + 1e-3, 200);
    const auto below = bcov::max_hedge_run(aa, ss, rr - 1e-3, 200);
    const auto dzb = bcov::dead_zone_fixed_point(aa, ss, rr - 1e-3);
    sharp = sharp && above.status == bcov::MaxHedgeStatus::Succeeded &&
            (below.status == bcov::MaxHedgeStatus::FailedAtRound || !dzb);
  }
  cr.run("threshold-sharpness", sharp);
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  CheckRunner cr;
  if (suite == "all" || suite == "opt") verify_opt(cr, seed);
  if (suite == "all" || suite == "sim") verify_sim(cr, seed);
  if (suite == "all" || suite == "analysis") verify_analysis(cr, seed);
  if (suite == "all" || suite == "lowerbound") verify_lowerbound(cr);
  std::cout << (cr.failures == 0 ? "all checks passed"
                                 : std::to_string(cr.failures) + " check(s) failed")
            << "\n";
  return cr.failures == 0 ? 0 : 1;
}

// ---- table1 -----------------------------------------------------------------

struct PublishedRow {
  const char* label;
  double denom;       // alpha = pi / denom
  double bh, su, gr;  // published ratio cells
  int dp_bh, dp_su, dp_gr;
};

int cmd_table1(int precision) {
  // Ratio cells as printed in the paper, with their printed decimal places;
  // a cell is flagged when the formula deviates beyond its rounding slack.
  const PublishedRow rows[] = {
      {"pi/2.5", 2.5, 1.051, 1.051, 1.132, 3, 3, 3},
      {"pi/3", 3.0, 1.154, 1.154, 1.232, 3, 3, 3},
      {"pi/3.5", 3.5, 1.231, 1.279, 1.389, 3, 3, 3},
      {"pi/4", 4.0, 1.2500, 1.414, 1.414, 4, 3, 3},
      {"pi/4.5", 4.5, 1.2386, 1.532, 1.305, 4, 3, 3},
      {"pi/5", 5.0, 1.2139, 1.618, 1.23, 4, 3, 2},
      {"pi/5.5", 5.5, 1.1844, 1.682, 1.188, 4, 3, 3},
      {"pi/6", 6.0, 1.154, 1.732, 1.154, 3, 3, 3},
      {"pi/8", 8.0, 1.08, 1.847, 1.08, 2, 3, 2},
  };
  int unexpected = 0;
  std::cout << "alpha      beta0      beta-hedge  straight-up  greedy\n";
  for (const auto& row : rows) {
    const double alpha = kPi / row.denom;
    const double bh = bcov::beta_hedge_ratio(alpha).ratio;
    const double su = bcov::su_ratio(alpha);
    const double gr = bcov::greedy_ratio(alpha);
    std::cout << std::left << std::setw(11) << row.label << std::setw(11)
              << fmt(bcov::beta0(alpha), precision) << std::setw(12)
              << fmt(bh, precision) << std::setw(13) << fmt(su, precision)
              << fmt(gr, precision) << "\n";
    const auto flag = [&](const char* cell, double got, double want, int dp) {
      const double tol = std::max(0.001, std::pow(10.0, -dp));
      if (std::abs(got - want) <= tol) return;
      const bool expected = std::string(row.label) == "pi/3" &&
                            std::string(cell) == "greedy";
      std::cout << "  note: " << cell << "(" << row.label << ") formula "
                << fmt(got, precision) << " vs published " << want
                << (expected ? " -- known inconsistency, the formula is "
                               "authoritative\n"
                             : " -- UNEXPECTED deviation\n");
      if (!expected) ++unexpected;
    };
    flag("beta-hedge", bh, row.bh, row.dp_bh);
    flag("straight-up", su, row.su, row.dp_su);
    flag("greedy", gr, row.gr, row.dp_gr);
  }
  return unexpected == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online barrier coverage with a drone: ratios, sweeps, "
               "simulation, and the adversarial lower bound"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --precision appear after the subcommand too
  int precision = 6;
  app.add_option("--precision", precision, "significant digits (1-15)")
      ->check(CLI::Range(1, 15));

  std::string alpha_text, alg_name = "beta-hedge";
  std::optional<std::string> beta_text;

  auto* ratio = app.add_subcommand("ratio", "competitive ratio of one policy");
  ratio->add_option("--alpha", alpha_text, "half angle (radians or pi/N)")
      ->required();
  ratio->add_option("--alg", alg_name,
                    "straight-up | greedy | beta-hedge");
  ratio->add_option("--beta", beta_text,
                    "hedge angle (beta-hedge only; default beta0)");

  std::string lo_text = "0.1", hi_text, format = "csv", out_path;
  int steps = 50;
  auto* sweep = app.add_subcommand("sweep", "ratio curves over an alpha range");
  sweep->add_option("--alpha-lo", lo_text, "range start (radians or pi/N)");
  sweep->add_option("--alpha-hi", hi_text, "range end")->required();
  sweep->add_option("--steps", steps, "row count (>= 2)");
  sweep->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "output file (default stdout)");

  std::string instance_file;
  auto* sim = app.add_subcommand("simulate", "replay an instance file");
  sim->add_option("--instance", instance_file,
                  "JSON array of request x-coordinates")
      ->required();
  sim->add_option("--alpha", alpha_text, "half angle")->required();
  sim->add_option("--alg", alg_name, "straight-up | greedy | beta-hedge");
  sim->add_option("--beta", beta_text, "hedge angle");

  std::optional<std::string> s_text, rho_text;
  int rounds = 200;
  bool trace = false;
  auto* lb = app.add_subcommand("lowerbound",
                                "adversarial lower bound and MaxHedge run");
  lb->add_option("--alpha", alpha_text, "half angle in (0, pi/4]")->required();
  lb->add_option("--s", s_text, "stream growth factor (default s*)");
  lb->add_option("--rho", rho_text, "budget ratio (default rho*)");
  lb->add_option("--rounds", rounds, "rounds to run");
  lb->add_flag("--trace", trace, "print the Z trace");

  std::string suite = "all";
  std::uint64_t seed = bcov::seed_from_env();
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "all | opt | sim | analysis | lowerbound")
      ->check(CLI::IsMember({"all", "opt", "sim", "analysis", "lowerbound"}));
  verify->add_option("--seed", seed, "oracle RNG seed");

  auto* table1 = app.add_subcommand("table1",
                                    "reproduce the published ratio table");
  auto* fig2 = app.add_subcommand("figure2-data",
                                  "sweep rows at the published alpha values");
  fig2->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  fig2->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ratio->parsed())
      return cmd_ratio(alpha_text, alg_name, beta_text, precision);
    if (sweep->parsed())
      return cmd_sweep(lo_text, hi_text, steps, format, out_path, precision);
    if (sim->parsed())
      return cmd_simulate(instance_file, alpha_text, alg_name, beta_text,
                          precision);
    if (lb->parsed())
      return cmd_lowerbound(alpha_text, s_text, rho_text, rounds, trace,
                            precision);
    if (verify->parsed()) return cmd_verify(suite, seed);
    if (table1->parsed()) return cmd_table1(precision);
    if (fig2->parsed()) {
      std::vector<double> alphas;
      for (double denom : {2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 8.0})
        alphas.push_back(kPi / denom);
      return emit_sweep(alphas, format, out_path, precision);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
