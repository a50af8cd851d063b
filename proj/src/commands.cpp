#include "goa2/commands.hpp"

#include <cstdio>
#include <sstream>

#include "goa2/rng.hpp"

namespace goa2 {

namespace {

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::GoVerified: return kExitVerified;
    case Verdict::GoFalsified: return kExitFalsified;
    case Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitUsage;
}

// Sampled reductivity: random h x m_i brackets projected off m_i.
double sampled_reductivity(const DecomposedSpace& space, int draws) {
  TrialRng rng(0);
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    if (space.h().dim() == 0) break;
    const Vector u = rng.unit_sphere(space.h());
    for (const Subspace* part : {&space.m1(), &space.m2()}) {
      const Vector v = rng.unit_sphere(*part);
      const Vector br = space.algebra()->bracket(u, v);
      worst = std::max(worst, (br - part->project(br)).norm());
    }
  }
  return worst;
}

Json dims_json(const DecomposedSpace& space) {
  return Json{{"g", space.algebra()->dim()},
              {"h", space.h().dim()},
              {"m1", space.m1().dim()},
              {"m2", space.m2().dim()}};
}

}  // namespace

DecomposedSpace space_for_mode(const std::string& key, const std::string& mode,
                               const Params& params, int split) {
  const SpaceDescriptor& desc = find_descriptor(key);
  if (!desc.constructed)
    throw NotConstructedError(key + " is registered but not constructed (" + desc.note + ")");
  if (desc.kind == SpaceDescriptor::Kind::Wallach) {
    if (split < 1 || split > 3) throw ContractError("split must be 1, 2 or 3");
    WallachSpace w = build_wallach(key);
    if (mode == "condition-i" || mode == "theta") return w.derived_triples[split - 1];
    return w.metric_split(split);
  }
  return build_space(key, params);
}

VerifyResult run_verify(const std::string& key, const std::string& mode,
                        const CampaignConfig& cfg_in, const Params& params,
                        const std::string& command_echo) {
  CampaignConfig cfg = cfg_in;
  cfg.space_key = key;
  if (mode == "theta" && cfg.thetas.empty()) cfg.thetas = {0.2, 0.5, 0.8};

  const DecomposedSpace space = space_for_mode(key, mode, params, cfg.split);

  CampaignReport report;
  if (mode == "condition-i") {
    report = campaign_triple_condition(space, cfg);
  } else if (mode == "theta") {
    report = campaign_theta_independence(space, cfg);
  } else if (mode == "geodesic") {
    report = campaign_geodesic(space, cfg);
  } else if (mode == "theorem2") {
    report = campaign_weighted_cross_check(space, cfg);
  } else {
    throw ContractError("unknown mode '" + mode + "'");
  }

  VerifyResult out;
  out.report = report;
  out.report_file = make_report_file(command_echo, "campaign", to_json(report));
  out.exit_code = exit_code_for(report.verdict);

  std::ostringstream s;
  s << key << " [" << mode << "] on " << space.label() << ": " << to_string(report.verdict)
    << "  (feasible " << report.feasible << ", infeasible " << report.infeasible
    << ", indeterminate " << report.indeterminate;
  if (mode == "theta" || mode == "theorem2")
    s << ", disagreements " << report.disagreements;
  s << ")\n"
    << "residuals min/median/max: " << format_residual(report.residual_min) << " / "
    << format_residual(report.residual_median) << " / "
    << format_residual(report.residual_max) << "\n";
  out.summary = s.str();
  return out;
}

CertifyResult run_certify(const std::string& key, const Params& params,
                          const std::string& command_echo) {
  const SpaceDescriptor& desc = find_descriptor(key);
  if (!desc.constructed)
    throw NotConstructedError(key + " is registered but not constructed (" + desc.note + ")");

  Json payload;
  payload["space"] = key;
  bool pass = true;
  std::ostringstream summary;

  if (desc.kind == SpaceDescriptor::Kind::Wallach) {
    WallachSpace w = build_wallach(key);
    payload["algebra"] = {{"name", w.algebra->name()},
                          {"dim", w.algebra->dim()},
                          {"matrix_size", w.algebra->matrix_size()},
                          {"invariants", to_json(w.algebra->certify())}};
    Json dims{{"g", w.algebra->dim()}, {"h", w.h.dim()}};
    for (int i = 0; i < 3; ++i) dims["m" + std::to_string(i + 1)] = w.m_parts[i].dim();
    payload["dims"] = dims;
    payload["bracket_relations"] = to_json(w.certify());
    Json triples = Json::array();
    for (const DecomposedSpace& t : w.derived_triples) {
      triples.push_back({{"label", t.label()},
                         {"dims", dims_json(t)},
                         {"is_triple", t.is_triple()},
                         {"invariants", to_json(t.certify())}});
    }
    payload["derived_triples"] = triples;
    for (const Json& group : {payload["algebra"]["invariants"], payload["bracket_relations"]})
      for (const Json& inv : group)
        if (!inv.at("pass").get<bool>()) pass = false;
    for (const Json& t : payload["derived_triples"])
      for (const Json& inv : t.at("invariants"))
        if (!inv.at("pass").get<bool>()) pass = false;
    summary << key << ": algebra " << w.algebra->name() << ", dim h = " << w.h.dim()
            << ", parts " << w.m_parts[0].dim() << "/" << w.m_parts[1].dim() << "/"
            << w.m_parts[2].dim() << "\n";
  } else {
    const Params p = resolve_params(desc, params);
    DecomposedSpace space = build_space(key, p);
    payload["params"] = p;
    payload["algebra"] = {{"name", space.algebra()->name()},
                          {"dim", space.algebra()->dim()},
                          {"matrix_size", space.algebra()->matrix_size()},
                          {"invariants", to_json(space.algebra()->certify())}};
    payload["dims"] = dims_json(space);
    payload["is_triple"] = space.is_triple();
    payload["decomposition"] = to_json(space.certify());
    const double sampled = sampled_reductivity(space, 200);
    payload["sampled_reductivity"] = {{"draws", 200},
                                      {"residual", sampled},
                                      {"pass", sampled < kTolAlgebra}};
    for (const Json& inv : payload["algebra"]["invariants"])
      if (!inv.at("pass").get<bool>()) pass = false;
    for (const Json& inv : payload["decomposition"])
      if (!inv.at("pass").get<bool>()) pass = false;
    if (sampled >= kTolAlgebra) pass = false;
    summary << key << ": " << space.algebra()->name() << "  dim h/m1/m2 = "
            << space.h().dim() << "/" << space.m1().dim() << "/" << space.m2().dim()
            << (space.is_triple() ? "  (triple)" : "") << "\n";
  }

  payload["pass"] = pass;
  CertifyResult out;
  out.pass = pass;
  out.report_file = make_report_file(command_echo, "certification", payload);
  summary << (pass ? "all invariants pass" : "CERTIFICATION FAILED") << "\n";
  out.summary = summary.str();
  out.exit_code = pass ? kExitVerified : kExitFalsified;
  return out;
}

Table1Result run_table1(int samples, std::uint64_t seed, int jobs, const Tolerances& tol) {
  Table1Result out;
  std::ostringstream md;
  md << "| key | g | k | h | params | verdict | median residual |\n";
  md << "|-----|---|---|---|--------|---------|-----------------|\n";

  bool any_falsified = false, any_indeterminate = false;
  for (const SpaceDescriptor& desc : list_catalog()) {
    if (desc.kind != SpaceDescriptor::Kind::Triple || desc.variant) continue;
    md << "| " << desc.key << " | " << desc.g_name << " | " << desc.k_name << " | "
       << desc.h_name << " | ";
    if (!desc.constructed) {
      md << "- | skipped (not constructed) | - |\n";
      continue;
    }
    const Params p = resolve_params(desc, {});
    md << format_params(desc, p) << " | ";

    CampaignConfig cfg;
    cfg.space_key = desc.key;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.tol = tol;
    DecomposedSpace space = build_space(desc.key, p);
    CampaignReport report = campaign_triple_condition(space, cfg);
    md << to_string(report.verdict) << " | " << format_residual(report.residual_median)
       << " |\n";
    if (report.verdict == Verdict::GoFalsified) any_falsified = true;
    if (report.verdict == Verdict::Indeterminate) any_indeterminate = true;
    out.rows.emplace_back(desc.key, std::move(report));
  }

  out.markdown = md.str();
  out.exit_code = any_falsified ? kExitFalsified
                                : (any_indeterminate ? kExitIndeterminate : kExitVerified);
  return out;
}

}  // namespace goa2
