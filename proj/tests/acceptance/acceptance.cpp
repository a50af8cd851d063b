// Acceptance suite: runs the eight release criteria at full scale and prints
// one pass/fail line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [path-to-goa2-cli]
// The CLI path (argv[1]) is needed for the end-to-end exit-code checks; when
// omitted those checks are reported as failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "goa2/catalog.hpp"
#include "goa2/classical.hpp"
#include "goa2/commands.hpp"
#include "goa2/rng.hpp"

using namespace goa2;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> constructed_triple_keys(bool include_variant) {
  std::vector<std::string> keys;
  for (const SpaceDescriptor& d : list_catalog()) {
    if (d.kind != SpaceDescriptor::Kind::Triple || !d.constructed) continue;
    if (d.variant && !include_variant) continue;
    keys.push_back(d.key);
  }
  return keys;
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Vector generic_m_vector(const DecomposedSpace& space, TrialRng& rng) {
  while (true) {
    Vector v = rng.unit_sphere(space.m());
    if (std::min(space.m1().project(v).norm(), space.m2().project(v).norm()) >= 1e-3)
      return v;
  }
}

// Criterion 1: algebra certification with exact dimension counts, under 30 s.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  double worst = 0.0;

  for (const SpaceDescriptor& d : list_catalog()) {
    if (!d.constructed) continue;
    AlgebraPtr algebra;
    if (d.kind == SpaceDescriptor::Kind::Wallach) {
      algebra = build_wallach(d.key).algebra;
    } else {
      algebra = build_space(d.key).algebra();
    }
    for (const InvariantResidual& inv : algebra->certify()) {
      worst = std::max(worst, inv.residual);
      if (!inv.pass) {
        pass = false;
        detail = d.key + " failed " + inv.name;
      }
    }
  }
  for (int n = 3; n <= 11; ++n)
    if (make_so(n)->dim() != n * (n - 1) / 2) pass = false;
  for (int n = 2; n <= 5; ++n)
    if (make_su(n)->dim() != n * n - 1) pass = false;
  for (int n = 1; n <= 3; ++n)
    if (make_sp(n)->dim() != n * (2 * n + 1)) pass = false;
  for (int n = 1; n <= 4; ++n)
    if (make_u(n)->dim() != n * n) pass = false;
  if (build_space("T1.3").h().dim() != 14) pass = false;
  if (build_space("T1.4").h().dim() != 21) pass = false;

  const double elapsed = seconds_since(start);
  if (worst >= 1e-10) pass = false;
  if (elapsed >= 30.0) pass = false;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max residual %.2e, %.1f s", worst, elapsed);
  report(1, "algebra certification and dimension counts", pass,
         detail.empty() ? buf : detail);
}

// Criterion 2: summary table campaign, 500 samples per row, seed 42, every
// constructed row go-verified with zero infeasible/indeterminate, under 5
// minutes single-threaded.
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  Tolerances tol;
  const Table1Result result = run_table1(500, 42, 1, tol);
  const double elapsed = seconds_since(start);
  bool pass = result.exit_code == kExitVerified;
  std::string detail;
  int rows = 0;
  for (const auto& [key, r] : result.rows) {
    ++rows;
    if (r.verdict != Verdict::GoVerified || r.infeasible != 0 || r.indeterminate != 0) {
      pass = false;
      detail = key + " not verified";
    }
  }
  if (rows != 14) {
    pass = false;
    detail = "expected 14 constructed rows, got " + std::to_string(rows);
  }
  if (elapsed >= 300.0) {
    pass = false;
    detail = "too slow";
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d rows verified in %.1f s", rows, elapsed);
  report(2, "summary-table campaign at 500 samples/row", pass,
         detail.empty() ? buf : detail);
}

// Criterion 3: Wallach falsification on every derived split, plus the
// end-to-end CLI exit codes for the deformed and constant profiles.
void criterion_3(const std::string& cli) {
  bool pass = true;
  std::string detail;
  for (const char* key : {"W6", "W12"}) {
    WallachSpace w = build_wallach(key);
    for (int split = 1; split <= 3; ++split) {
      CampaignConfig cfg;
      cfg.space_key = key;
      cfg.samples = 500;
      cfg.seed = 42;
      const CampaignReport r =
          campaign_triple_condition(w.derived_triples[split - 1], cfg);
      if (r.verdict != Verdict::GoFalsified || r.infeasible < 495 ||
          r.residual_median <= 1e-4) {
        pass = false;
        detail = std::string(key) + " split " + std::to_string(split) + ": " +
                 std::to_string(r.infeasible) + "/500 infeasible";
      }
    }
  }
  if (cli.empty()) {
    pass = false;
    detail = "CLI path not provided";
  } else {
    for (const char* key : {"W6", "W12"}) {
      const int deformed = run_cli(
          cli, std::string("verify ") + key +
                   " --mode geodesic --phi \"1+s^2/4\" --samples 500 --seed 42"
                   " --out /dev/null");
      const int constant = run_cli(
          cli, std::string("verify ") + key +
                   " --mode geodesic --phi \"1\" --samples 500 --seed 42"
                   " --out /dev/null");
      if (deformed != 1 || constant != 0) {
        pass = false;
        detail = std::string(key) + " CLI exits " + std::to_string(deformed) + "/" +
                 std::to_string(constant) + ", want 1/0";
      }
    }
  }
  report(3, "Wallach splits falsified (>= 99%) and CLI exit codes", pass, detail);
}

// Criterion 4: fundamental tensor vs central finite difference of F^2/2 at
// step 1e-5, relative error < 1e-6, 500 samples per space per profile.
void criterion_4() {
  const double step = 1e-5;
  double worst = 0.0;
  std::string where;
  std::vector<std::pair<std::string, DecomposedSpace>> spaces;
  for (const std::string& key : constructed_triple_keys(false))
    spaces.emplace_back(key, build_space(key));
  spaces.emplace_back("W6", build_wallach("W6").metric_split(3));
  spaces.emplace_back("W12", build_wallach("W12").metric_split(3));

  for (const auto& [key, space] : spaces) {
    for (const char* src : {"sqrt(1+s^2)", "1+s^2/4", "1"}) {
      NormContext ctx(space, PhiFunction::parse(src));
      TrialRng rng(trial_seed(42, std::hash<std::string>{}(key + src)));
      for (int trial = 0; trial < 500; ++trial) {
        const Vector u = generic_m_vector(space, rng);
        const Vector v = space.m().project(rng.gaussian(space.algebra()->dim()));
        const double fp = ctx.norm_value(u + step * v);
        const double fm = ctx.norm_value(u - step * v);
        const double fd = 0.5 * (fp * fp - fm * fm) / (2.0 * step);
        const double formula = ctx.fundamental_tensor(u, v);
        const double err = std::abs(formula - fd) / std::max(1.0, std::abs(formula));
        if (err > worst) {
          worst = err;
          where = key + " " + src;
        }
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max rel err %.2e (%s)", worst, where.c_str());
  report(4, "fundamental tensor against the finite-difference oracle", worst < 1e-6, buf);
}

// Criterion 5: rescaled pair witnesses pass the geodesic checker at 1e-7,
// 200 samples per constructed row, profile 1 + s^2/4.
void criterion_5() {
  const PhiFunction phi = PhiFunction::parse("1 + s^2/4");
  double worst = 0.0;
  std::string where;
  long checked = 0;
  for (const std::string& key : constructed_triple_keys(false)) {
    DecomposedSpace space = build_space(key);
    NormContext ctx(space, phi);
    TrialRng rng(trial_seed(42, std::hash<std::string>{}(key)));
    for (int trial = 0; trial < 200; ++trial) {
      const Vector v_f = rng.unit_sphere(space.m1()) * (0.3 + 0.6 * rng.uniform());
      const Vector v_b = rng.unit_sphere(space.m2()) * (0.3 + 0.6 * rng.uniform());
      const FeasibilityReport pair = solve_triple_condition(space, v_f, v_b);
      if (!pair.feasible) continue;
      ++checked;
      const Vector v = v_f + v_b;
      const double kappa = geodesic_rescale_factor(phi, ctx.theta(v));
      GeodesicCandidate cand{v, Vector(kappa * pair.u), ctx.theta(v), false};
      const double res = check_geodesic_vector(ctx, cand);
      if (res > worst) {
        worst = res;
        where = key;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%ld witnesses, max checker residual %.2e (%s)", checked,
                worst, where.c_str());
  report(5, "pair-to-geodesic witness rescaling below 1e-7", worst < 1e-7 && checked > 0,
         buf);
}

// Criterion 6: feasibility verdicts agree across theta in {0.2, 0.5, 0.8},
// 200 samples, for every constructed triple and both Wallach derived triples.
void criterion_6() {
  bool pass = true;
  std::string detail;
  std::vector<std::pair<std::string, DecomposedSpace>> spaces;
  for (const std::string& key : constructed_triple_keys(true))
    spaces.emplace_back(key, build_space(key));
  spaces.emplace_back("W6", build_wallach("W6").derived_triples[2]);
  spaces.emplace_back("W12", build_wallach("W12").derived_triples[2]);

  for (const auto& [key, space] : spaces) {
    CampaignConfig cfg;
    cfg.space_key = key;
    cfg.samples = 200;
    cfg.seed = 42;
    cfg.thetas = {0.2, 0.5, 0.8};
    const CampaignReport r = campaign_theta_independence(space, cfg);
    if (r.disagreements != 0 || r.agreements != 200) {
      pass = false;
      detail = key + ": " + std::to_string(r.disagreements) + " disagreements";
    }
  }
  report(6, "theta-independence of pair feasibility", pass, detail);
}

// Criterion 7: weighted condition matches Riemannian geodesic feasibility,
// 200 samples per space, 100% agreement.
void criterion_7() {
  bool pass = true;
  std::string detail;
  std::vector<std::pair<std::string, DecomposedSpace>> spaces;
  for (const std::string& key : constructed_triple_keys(false))
    spaces.emplace_back(key, build_space(key));
  spaces.emplace_back("W6", build_wallach("W6").metric_split(3));
  spaces.emplace_back("W12", build_wallach("W12").metric_split(3));

  for (const auto& [key, space] : spaces) {
    CampaignConfig cfg;
    cfg.space_key = key;
    cfg.samples = 200;
    cfg.seed = 42;
    const CampaignReport r = campaign_weighted_cross_check(space, cfg);
    if (r.disagreements != 0 || r.agreements != 200) {
      pass = false;
      detail = key + ": " + std::to_string(r.disagreements) + " disagreements";
    }
  }
  report(7, "weighted condition cross-validates Riemannian geodesic solves", pass, detail);
}

// Criterion 8: byte-identical summary Markdown under 1, 4 and 8 jobs.
void criterion_8() {
  Tolerances tol;
  const Table1Result one = run_table1(500, 42, 1, tol);
  const Table1Result rerun = run_table1(500, 42, 1, tol);
  const Table1Result four = run_table1(500, 42, 4, tol);
  const Table1Result eight = run_table1(500, 42, 8, tol);
  const bool pass = one.markdown == rerun.markdown && one.markdown == four.markdown &&
                    one.markdown == eight.markdown;
  report(8, "summary Markdown byte-identical under 1/4/8 jobs", pass,
         pass ? "" : "renderings differ");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion_1();
    criterion_2();
    criterion_3(cli);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("acceptance finished in %.1f s: %s\n", seconds_since(start),
              g_failures == 0 ? "all criteria pass" : "FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
