#include "goa2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "goa2/rng.hpp"

namespace goa2 {

namespace {

struct TrialResult {
  Feasibility outcome = Feasibility::Indeterminate;
  double residual = 0.0;
  bool disagreement = false;
  Vector v1, v2, u;
};

using TrialFn = std::function<TrialResult(int trial, TrialRng& rng)>;

// Runs trials 0..samples-1 with per-trial counter-derived seeds; results are
// stored by index, so aggregation is independent of scheduling order.
std::vector<TrialResult> run_trials(const CampaignConfig& cfg, const TrialFn& fn) {
  std::vector<TrialResult> results(cfg.samples);
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (int i = 0; i < cfg.samples; ++i) {
      TrialRng rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      results[i] = fn(i, rng);
    }
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= cfg.samples) return;
        TrialRng rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        results[i] = fn(i, rng);
      }
    });
  }
  for (std::thread& w : workers) w.join();
  return results;
}

CampaignReport aggregate(const DecomposedSpace& space, const CampaignConfig& cfg,
                         std::string mode, const std::vector<TrialResult>& results,
                         bool agreement_mode) {
  CampaignReport report;
  report.space_key = cfg.space_key;
  report.mode = std::move(mode);
  report.config = cfg;
  report.basis_fingerprint = basis_fingerprint(space);

  std::vector<double> residuals;
  residuals.reserve(results.size());
  for (const TrialResult& r : results) {
    residuals.push_back(r.residual);
    switch (r.outcome) {
      case Feasibility::Feasible: ++report.feasible; break;
      case Feasibility::Infeasible: ++report.infeasible; break;
      case Feasibility::Indeterminate: ++report.indeterminate; break;
    }
    if (agreement_mode) {
      if (r.disagreement) ++report.disagreements;
      else ++report.agreements;
    }
  }

  std::sort(residuals.begin(), residuals.end());
  if (!residuals.empty()) {
    report.residual_min = residuals.front();
    report.residual_max = residuals.back();
    const std::size_t n = residuals.size();
    report.residual_median =
        (n % 2 == 1) ? residuals[n / 2] : 0.5 * (residuals[n / 2 - 1] + residuals[n / 2]);
  }

  // Witnesses: the first infeasible trials if any, else the first trials.
  for (const TrialResult& r : results) {
    if (report.witnesses.size() >= 3) break;
    if (report.infeasible > 0 && r.outcome != Feasibility::Infeasible) continue;
    WitnessExample w;
    w.trial = static_cast<int>(&r - results.data());
    w.v1 = r.v1;
    w.v2 = r.v2;
    w.u = r.u;
    w.residual = r.residual;
    report.witnesses.push_back(std::move(w));
  }

  // Verdict: > 1% indeterminate trials surface as an indeterminate campaign;
  // otherwise one surviving infeasible (or disagreement) falsifies.
  const bool too_many_indeterminate =
      report.indeterminate * 100 > static_cast<long>(results.size());
  if (too_many_indeterminate) {
    report.verdict = Verdict::Indeterminate;
  } else if (agreement_mode) {
    report.verdict = report.disagreements > 0 ? Verdict::GoFalsified : Verdict::GoVerified;
  } else {
    report.verdict = report.infeasible > 0 ? Verdict::GoFalsified : Verdict::GoVerified;
  }
  return report;
}

// Generic draw in m: both components at least 1e-3 of the norm, away from
// the boundary branch.
Vector generic_m_vector(const DecomposedSpace& space, TrialRng& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vector v = rng.unit_sphere(space.m());
    const double r1 = space.m1().project(v).norm();
    const double r2 = space.m2().project(v).norm();
    if (std::min(r1, r2) >= 1e-3) return v;
  }
  throw Error("generic sampling failed to leave the component boundary");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::GoVerified: return "go-verified";
    case Verdict::GoFalsified: return "go-falsified";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string basis_fingerprint(const DecomposedSpace& space) {
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a over rounded entries
  auto mix = [&hash](double x) {
    const auto q = static_cast<std::int64_t>(std::llround(x * 1e12));
    auto bytes = static_cast<std::uint64_t>(q);
    for (int b = 0; b < 8; ++b) {
      hash ^= (bytes >> (8 * b)) & 0xff;
      hash *= 1099511628211ull;
    }
  };
  const LieAlgebra& g = *space.algebra();
  for (int i = 0; i < g.dim(); ++i) {
    const Matrix& m = g.basis_matrix(i);
    for (int c = 0; c < m.cols(); ++c)
      for (int r = 0; r < m.rows(); ++r) mix(m(r, c));
  }
  for (const Subspace* s : {&space.h(), &space.m1(), &space.m2()}) {
    for (int c = 0; c < s->basis().cols(); ++c)
      for (int r = 0; r < s->basis().rows(); ++r) mix(s->basis()(r, c));
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

CampaignReport campaign_triple_condition(const DecomposedSpace& space,
                                         const CampaignConfig& cfg) {
  if (!space.is_triple())
    throw ContractError("campaign_triple_condition: space is not a certified triple");
  if (cfg.samples < 1) throw ContractError("campaign: samples must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  auto fn = [&](int, TrialRng& rng) {
    TrialResult r;
    r.v1 = rng.unit_sphere(space.m1());
    r.v2 = rng.unit_sphere(space.m2());
    FeasibilityReport fr = solve_triple_condition(space, r.v1, r.v2);
    r.residual = fr.residual;
    r.u = fr.u;
    r.outcome = fr.classification(cfg.tol);
    return r;
  };
  CampaignReport report = aggregate(space, cfg, "condition-i", run_trials(cfg, fn), false);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport campaign_theta_independence(const DecomposedSpace& space,
                                           const CampaignConfig& cfg) {
  if (!space.is_triple())
    throw ContractError("campaign_theta_independence: space is not a certified triple");
  if (cfg.thetas.size() < 2)
    throw ContractError("campaign_theta_independence: need at least two thetas");
  for (double t : cfg.thetas)
    if (t <= 0.0 || t >= 1.0)
      throw ContractError("campaign_theta_independence: thetas must be strictly interior");
  if (cfg.samples < 1) throw ContractError("campaign: samples must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  auto fn = [&](int, TrialRng& rng) {
    TrialResult r;
    r.v1 = rng.unit_sphere(space.m1());
    r.v2 = rng.unit_sphere(space.m2());
    bool first = true;
    Feasibility agreed = Feasibility::Indeterminate;
    double worst = 0.0;
    for (double t : cfg.thetas) {
      // Unit vector with m2-fraction t: sqrt(1-t^2) v_F + t v_B.
      FeasibilityReport fr = solve_triple_condition(space, std::sqrt(1.0 - t * t) * r.v1,
                                                    t * r.v2);
      const Feasibility f = fr.classification(cfg.tol);
      worst = std::max(worst, fr.residual);
      if (first) {
        agreed = f;
        r.u = fr.u;
        first = false;
      } else if (f != agreed) {
        r.disagreement = true;
      }
    }
    r.residual = worst;
    r.outcome = r.disagreement ? Feasibility::Indeterminate : agreed;
    return r;
  };
  CampaignReport report = aggregate(space, cfg, "theta", run_trials(cfg, fn), true);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport campaign_geodesic(const DecomposedSpace& space, const CampaignConfig& cfg) {
  if (cfg.phi_sources.empty())
    throw ContractError("campaign_geodesic: need at least one profile");
  if (cfg.samples < 1) throw ContractError("campaign: samples must be >= 1");
  std::vector<PhiFunction> phis;
  for (const std::string& src : cfg.phi_sources) phis.push_back(PhiFunction::parse(src));
  std::vector<NormContext> contexts;
  for (const PhiFunction& p : phis) contexts.emplace_back(space, p);
  const auto start = std::chrono::steady_clock::now();

  auto fn = [&](int, TrialRng& rng) {
    TrialResult r;
    const Vector v = generic_m_vector(space, rng);
    r.v1 = space.m1().project(v);
    r.v2 = space.m2().project(v);
    bool any_infeasible = false, all_feasible = true;
    double worst = 0.0;
    for (const NormContext& ctx : contexts) {
      auto [cand, fr] = solve_geodesic_vector(ctx, v);
      worst = std::max(worst, fr.residual);
      const Feasibility f = fr.classification(cfg.tol);
      if (f == Feasibility::Infeasible) any_infeasible = true;
      if (f != Feasibility::Feasible) {
        all_feasible = false;
        continue;
      }
      // Accepted candidates are re-checked through the independent pairing.
      const double check = check_geodesic_vector(ctx, cand);
      if (check >= 10.0 * cfg.tol.feasible) all_feasible = false;
      r.u = cand.u;
    }
    r.residual = worst;
    r.outcome = any_infeasible ? Feasibility::Infeasible
                               : (all_feasible ? Feasibility::Feasible
                                               : Feasibility::Indeterminate);
    return r;
  };
  CampaignReport report = aggregate(space, cfg, "geodesic", run_trials(cfg, fn), false);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport campaign_weighted_cross_check(const DecomposedSpace& space,
                                             const CampaignConfig& cfg) {
  if (cfg.samples < 1) throw ContractError("campaign: samples must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  auto fn = [&](int, TrialRng& rng) {
    TrialResult r;
    r.v1 = rng.unit_sphere(space.m1());
    r.v2 = rng.unit_sphere(space.m2());
    double c1 = 1.0, c2 = 2.0;
    for (int attempt = 0; attempt < 256; ++attempt) {
      c1 = rng.log_uniform(0.1, 10.0);
      c2 = rng.log_uniform(0.1, 10.0);
      // The weighted <-> Riemannian correspondence degenerates on the
      // diagonal c1 = c2 (the normal metric); stay clear of it.
      if (std::abs(std::log(c1 / c2)) >= 0.05) break;
    }
    FeasibilityReport weighted = solve_weighted_condition(space, r.v1, r.v2, c1, c2);
    r.u = weighted.u;

    NormContext ctx(space, PhiFunction::riemannian(c1, c2));
    auto [cand, geo] = solve_geodesic_vector(ctx, Vector(r.v1 + r.v2));

    const Feasibility fw = weighted.classification(cfg.tol);
    const Feasibility fg = geo.classification(cfg.tol);
    r.disagreement = fw != fg;
    r.residual = std::max(weighted.residual, geo.residual);
    r.outcome = r.disagreement ? Feasibility::Indeterminate : fw;
    return r;
  };
  CampaignReport report = aggregate(space, cfg, "theorem2", run_trials(cfg, fn), true);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace goa2
