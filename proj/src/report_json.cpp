#include "goa2/report_json.hpp"

#include <chrono>
#include <ctime>

namespace goa2 {

namespace {

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const Json& j) {
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  return v;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "go-verified") return Verdict::GoVerified;
  if (s == "go-falsified") return Verdict::GoFalsified;
  return Verdict::Indeterminate;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json to_json(const CampaignReport& r) {
  Json j;
  j["space"] = r.space_key;
  j["mode"] = r.mode;
  j["verdict"] = to_string(r.verdict);
  j["counts"] = {{"feasible", r.feasible},
                 {"infeasible", r.infeasible},
                 {"indeterminate", r.indeterminate}};
  j["agreement"] = {{"agreements", r.agreements}, {"disagreements", r.disagreements}};
  j["residuals"] = {{"min", r.residual_min},
                    {"median", r.residual_median},
                    {"max", r.residual_max}};
  Json witnesses = Json::array();
  for (const WitnessExample& w : r.witnesses) {
    witnesses.push_back({{"trial", w.trial},
                         {"v1", vector_to_json(w.v1)},
                         {"v2", vector_to_json(w.v2)},
                         {"u", vector_to_json(w.u)},
                         {"residual", w.residual}});
  }
  j["witnesses"] = witnesses;
  j["config"] = {{"samples", r.config.samples},
                 {"seed", r.config.seed},
                 {"phi", r.config.phi_sources},
                 {"thetas", r.config.thetas},
                 {"tolerances",
                  {{"feasible", r.config.tol.feasible},
                   {"infeasible", r.config.tol.infeasible}}},
                 {"jobs", r.config.jobs},
                 {"split", r.config.split}};
  j["basis_fingerprint"] = r.basis_fingerprint;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

CampaignReport campaign_report_from_json(const Json& j) {
  CampaignReport r;
  r.space_key = j.at("space").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.feasible = j.at("counts").at("feasible").get<long>();
  r.infeasible = j.at("counts").at("infeasible").get<long>();
  r.indeterminate = j.at("counts").at("indeterminate").get<long>();
  r.agreements = j.at("agreement").at("agreements").get<long>();
  r.disagreements = j.at("agreement").at("disagreements").get<long>();
  r.residual_min = j.at("residuals").at("min").get<double>();
  r.residual_median = j.at("residuals").at("median").get<double>();
  r.residual_max = j.at("residuals").at("max").get<double>();
  for (const Json& w : j.at("witnesses")) {
    WitnessExample e;
    e.trial = w.at("trial").get<int>();
    e.v1 = vector_from_json(w.at("v1"));
    e.v2 = vector_from_json(w.at("v2"));
    e.u = vector_from_json(w.at("u"));
    e.residual = w.at("residual").get<double>();
    r.witnesses.push_back(std::move(e));
  }
  const Json& c = j.at("config");
  r.config.space_key = r.space_key;
  r.config.samples = c.at("samples").get<int>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.config.phi_sources = c.at("phi").get<std::vector<std::string>>();
  r.config.thetas = c.at("thetas").get<std::vector<double>>();
  r.config.tol.feasible = c.at("tolerances").at("feasible").get<double>();
  r.config.tol.infeasible = c.at("tolerances").at("infeasible").get<double>();
  r.config.jobs = c.at("jobs").get<int>();
  r.config.split = c.at("split").get<int>();
  r.basis_fingerprint = j.at("basis_fingerprint").get<std::string>();
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

Json make_report_file(const std::string& command, const std::string& kind, Json payload) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["kind"] = kind;
  j["generated_utc"] = utc_now();
  j[kind] = std::move(payload);
  return j;
}

Json to_json(const std::vector<InvariantResidual>& residuals) {
  Json arr = Json::array();
  for (const InvariantResidual& r : residuals)
    arr.push_back({{"name", r.name}, {"residual", r.residual}, {"pass", r.pass}});
  return arr;
}

}  // namespace goa2
