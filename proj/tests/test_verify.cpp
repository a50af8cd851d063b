#include <doctest.h>

#include "goa2/catalog.hpp"
#include "goa2/commands.hpp"
#include "goa2/report_json.hpp"
#include "goa2/verify.hpp"

using namespace goa2;

namespace {

CampaignConfig config(const std::string& key, int samples, std::uint64_t seed = 42) {
  CampaignConfig cfg;
  cfg.space_key = key;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

Json json_without_walltime(const CampaignReport& r) {
  Json j = to_json(r);
  j.erase("wall_seconds");
  return j;
}

}  // namespace

TEST_CASE("campaigns are deterministic and scheduling-independent") {
  DecomposedSpace space = build_space("T1.5");
  CampaignConfig cfg = config("T1.5", 60);
  const CampaignReport a = campaign_triple_condition(space, cfg);
  const CampaignReport b = campaign_triple_condition(space, cfg);
  CHECK(json_without_walltime(a) == json_without_walltime(b));

  CampaignConfig parallel = cfg;
  parallel.jobs = 4;
  const CampaignReport c = campaign_triple_condition(space, parallel);
  Json jc = json_without_walltime(c);
  jc["config"]["jobs"] = 1;  // echo differs by construction
  CHECK(jc == json_without_walltime(a));

  CampaignConfig other_seed = cfg;
  other_seed.seed = 43;
  const CampaignReport d = campaign_triple_condition(space, other_seed);
  CHECK(d.residual_median != a.residual_median);
}

TEST_CASE("pair-condition campaigns: positive and negative spaces") {
  const CampaignReport good =
      campaign_triple_condition(build_space("T1.1"), config("T1.1", 100));
  CHECK(good.verdict == Verdict::GoVerified);
  CHECK(good.feasible == 100);
  CHECK(good.infeasible == 0);
  CHECK(good.indeterminate == 0);

  const CampaignReport bad = campaign_triple_condition(
      build_wallach("W6").derived_triples[2], config("W6", 100));
  CHECK(bad.verdict == Verdict::GoFalsified);
  CHECK(bad.infeasible >= 99);
  CHECK(bad.residual_median > 1e-4);

  const CampaignReport w12 = campaign_triple_condition(
      build_wallach("W12").derived_triples[0], config("W12", 100));
  CHECK(w12.verdict == Verdict::GoFalsified);
  CHECK(w12.infeasible >= 99);

  const CampaignReport single =
      campaign_triple_condition(build_space("T1.5"), config("T1.5", 1));
  CHECK(single.feasible + single.infeasible + single.indeterminate == 1);
}

TEST_CASE("theta independence campaigns") {
  CampaignConfig cfg = config("T1.5", 60);
  cfg.thetas = {0.2, 0.5, 0.8};
  const CampaignReport good = campaign_theta_independence(build_space("T1.5"), cfg);
  CHECK(good.verdict == Verdict::GoVerified);
  CHECK(good.disagreements == 0);
  CHECK(good.agreements == 60);

  CampaignConfig wcfg = config("W6", 60);
  wcfg.thetas = {0.2, 0.5, 0.8};
  const CampaignReport w =
      campaign_theta_independence(build_wallach("W6").derived_triples[2], wcfg);
  CHECK(w.verdict == Verdict::GoVerified);
  CHECK(w.disagreements == 0);
  CHECK(w.infeasible == 60);

  CampaignConfig bad = config("T1.5", 10);
  bad.thetas = {0.5};
  CHECK_THROWS_AS(campaign_theta_independence(build_space("T1.5"), bad), ContractError);
  bad.thetas = {0.5, 1.0};
  CHECK_THROWS_AS(campaign_theta_independence(build_space("T1.5"), bad), ContractError);
}

TEST_CASE("geodesic campaigns verify the table rows and falsify the Wallach split") {
  CampaignConfig cfg = config("T1.5", 50);
  cfg.phi_sources = {"sqrt(1+s^2)", "1 + s^2/4"};
  const CampaignReport good = campaign_geodesic(build_space("T1.5"), cfg);
  CHECK(good.verdict == Verdict::GoVerified);
  CHECK(good.feasible == 50);

  CampaignConfig wcfg = config("W6", 50);
  wcfg.phi_sources = {"1 + s^2/4"};
  const CampaignReport bad =
      campaign_geodesic(build_wallach("W6").metric_split(3), wcfg);
  CHECK(bad.verdict == Verdict::GoFalsified);
  CHECK(bad.infeasible >= 49);

  wcfg.phi_sources = {"1"};
  const CampaignReport normal =
      campaign_geodesic(build_wallach("W6").metric_split(3), wcfg);
  CHECK(normal.verdict == Verdict::GoVerified);

  CampaignConfig none = config("T1.5", 10);
  CHECK_THROWS_AS(campaign_geodesic(build_space("T1.5"), none), ContractError);
}

TEST_CASE("weighted cross-check agrees on both kinds of spaces") {
  const CampaignReport good =
      campaign_weighted_cross_check(build_space("T1.8"), config("T1.8", 100));
  CHECK(good.verdict == Verdict::GoVerified);
  CHECK(good.agreements == 100);
  CHECK(good.feasible == 100);

  const CampaignReport w =
      campaign_weighted_cross_check(build_wallach("W6").metric_split(3), config("W6", 100));
  CHECK(w.verdict == Verdict::GoVerified);
  CHECK(w.agreements == 100);
  CHECK(w.infeasible == 100);
}

TEST_CASE("witnesses replay to the recorded residual") {
  DecomposedSpace space = build_wallach("W6").derived_triples[2];
  const CampaignReport r = campaign_triple_condition(space, config("W6", 50));
  REQUIRE(!r.witnesses.empty());
  for (const WitnessExample& w : r.witnesses) {
    const FeasibilityReport replay = solve_triple_condition(space, w.v1, w.v2);
    CHECK(std::abs(replay.residual - w.residual) < 1e-12);
  }
  CHECK(r.basis_fingerprint == basis_fingerprint(space));
}

TEST_CASE("pair condition holds beyond the smallest parameters") {
  struct Case {
    const char* key;
    Params params;
  };
  const Case cases[] = {{"T1.1", {{"n", 3}}},
                        {"T1.5", {{"n", 3}}},
                        {"T1.9", {{"n", 2}}},
                        {"T2.1", {{"r", 2}, {"n", 2}}}};
  for (const Case& c : cases) {
    DecomposedSpace space = build_space(c.key, c.params);
    const CampaignReport r = campaign_triple_condition(space, config(c.key, 50));
    INFO(c.key);
    CHECK(r.verdict == Verdict::GoVerified);
    CHECK(r.feasible == 50);
  }
}

TEST_CASE("verdict is monotone under more samples on a verified row") {
  DecomposedSpace space = build_space("T1.5");
  const CampaignReport small = campaign_triple_condition(space, config("T1.5", 500));
  const CampaignReport soak = campaign_triple_condition(space, config("T1.5", 5000));
  CHECK(small.verdict == Verdict::GoVerified);
  CHECK(soak.verdict == Verdict::GoVerified);
}

TEST_CASE("campaign report JSON round-trips") {
  DecomposedSpace space = build_wallach("W12").derived_triples[1];
  CampaignConfig cfg = config("W12", 25);
  cfg.thetas = {0.2, 0.8};
  const CampaignReport r = campaign_theta_independence(space, cfg);
  const Json j = to_json(r);
  const Json reparsed = Json::parse(j.dump());
  const CampaignReport back = campaign_report_from_json(reparsed);
  CHECK(to_json(back) == j);

  const Json envelope = make_report_file("cmdline", "campaign", j);
  CHECK(envelope.at("schema_version") == "1");
  CHECK(envelope.at("campaign") == j);
}

TEST_CASE("command layer: verify and certify wiring") {
  CampaignConfig cfg = config("T1.9", 40);
  const VerifyResult v = run_verify("T1.9", "condition-i", cfg, {}, "test");
  CHECK(v.exit_code == kExitVerified);
  CHECK(v.report.verdict == Verdict::GoVerified);
  CHECK(v.report_file.at("campaign").at("space") == "T1.9");

  const CertifyResult c = run_certify("T1.3", {}, "test");
  CHECK(c.exit_code == kExitVerified);
  CHECK(c.pass);
  CHECK(c.report_file.at("certification").at("dims").at("h") == 14);

  CHECK_THROWS_AS(run_certify("T2.3", {}, "test"), NotConstructedError);
  CHECK_THROWS_AS(run_verify("absent", "condition-i", cfg, {}, "test"), UnknownKeyError);
  CHECK_THROWS_AS(run_verify("T1.9", "bogus", cfg, {}, "test"), ContractError);

  const CertifyResult w6 = run_certify("W6", {}, "test");
  CHECK(w6.exit_code == kExitVerified);
  int relations = 0;
  for (const Json& inv : w6.report_file.at("certification").at("bracket_relations")) {
    CHECK(inv.at("residual").get<double>() < 1e-10);
    ++relations;
  }
  CHECK(relations == 9);
}

TEST_CASE("summary table: verdict column and byte-stable rendering") {
  Tolerances tol;
  const Table1Result a = run_table1(20, 42, 1, tol);
  const Table1Result b = run_table1(20, 42, 4, tol);
  CHECK(a.exit_code == kExitVerified);
  CHECK(a.markdown == b.markdown);
  CHECK(a.rows.size() == 14);
  CHECK(a.markdown.find("skipped (not constructed)") != std::string::npos);
  CHECK(a.markdown.find("T1.4std") == std::string::npos);
  for (const auto& [key, report] : a.rows) CHECK(report.verdict == Verdict::GoVerified);
}
