#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "goa2/commands.hpp"

namespace {

using namespace goa2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GOA2_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed GOA2_SEED\n";
    }
  }
  return 42;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

Params collect_params(int n, int r) {
  Params p;
  if (n >= 0) p["n"] = n;
  if (r >= 0) p["r"] = r;
  return p;
}

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i) echo += " ";
    echo += argv[i];
  }
  return echo;
}

int cmd_list() {
  std::printf("%-8s %-10s %-18s %-18s %-10s %-15s %s\n", "key", "g", "k", "h", "params",
              "status", "note");
  for (const SpaceDescriptor& d : list_catalog()) {
    std::string params;
    for (const ParamSpec& spec : d.params) {
      if (!params.empty()) params += ",";
      params += spec.name + ">=" + std::to_string(spec.min_value);
    }
    if (params.empty()) params = "-";
    std::string status = d.constructed ? "constructed" : "not-constructed";
    if (d.variant) status += " (variant)";
    std::printf("%-8s %-10s %-18s %-18s %-10s %-15s %s\n", d.key.c_str(), d.g_name.c_str(),
                d.k_name.c_str(), d.h_name.c_str(), params.c_str(), status.c_str(),
                d.note.c_str());
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goa2: feasibility campaigns for deformed metrics on coset spaces"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the space registry");

  auto* certify = app.add_subcommand("certify", "Certify a space's algebraic invariants");
  std::string certify_key, certify_out;
  int certify_n = -1, certify_r = -1;
  certify->add_option("key", certify_key, "registry key")->required();
  certify->add_option("--n", certify_n, "parameter n override");
  certify->add_option("--r", certify_r, "parameter r override");
  certify->add_option("--out", certify_out, "JSON report path");

  auto* verify = app.add_subcommand("verify", "Run a sampling campaign");
  std::string verify_key, verify_mode, verify_out = "goa2_report.json";
  CampaignConfig cfg;
  cfg.seed = default_seed();
  int verify_n = -1, verify_r = -1;
  verify->add_option("key", verify_key, "registry key")->required();
  verify->add_option("--mode", verify_mode, "condition-i | geodesic | theta | theorem2")
      ->required()
      ->check(CLI::IsMember({"condition-i", "geodesic", "theta", "theorem2"}));
  verify->add_option("--samples", cfg.samples, "trial count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "campaign seed (default: GOA2_SEED or 42)");
  verify->add_option("--phi", cfg.phi_sources, "profile expression(s), geodesic mode");
  verify->add_option("--theta", cfg.thetas, "theta values in (0,1), theta mode");
  verify->add_option("--tol-feasible", cfg.tol.feasible, "feasibility threshold");
  verify->add_option("--tol-infeasible", cfg.tol.infeasible, "infeasibility threshold");
  verify->add_option("--split", cfg.split, "Wallach summand (1..3)")
      ->check(CLI::Range(1, 3));
  verify->add_option("--jobs", cfg.jobs, "parallel trial workers")->check(CLI::PositiveNumber);
  verify->add_option("--n", verify_n, "parameter n override");
  verify->add_option("--r", verify_r, "parameter r override");
  verify->add_option("--out", verify_out, "JSON report path");

  auto* table1 = app.add_subcommand("table1", "Pair-condition campaign over the summary table");
  int t1_samples = 500, t1_jobs = 1;
  std::uint64_t t1_seed = default_seed();
  std::string t1_out;
  table1->add_option("--samples", t1_samples, "trials per row")->check(CLI::PositiveNumber);
  table1->add_option("--seed", t1_seed, "campaign seed");
  table1->add_option("--jobs", t1_jobs, "parallel trial workers")->check(CLI::PositiveNumber);
  table1->add_option("--out", t1_out, "directory for per-row JSON reports and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitVerified : kExitUsage;
  }

  const std::string echo = command_echo(argc, argv);
  try {
    if (app.got_subcommand("list")) return cmd_list();

    if (app.got_subcommand("certify")) {
      CertifyResult result =
          run_certify(certify_key, collect_params(certify_n, certify_r), echo);
      std::cout << result.summary;
      auto print_invariants = [](const goa2::Json& array) {
        for (const auto& entry : array) {
          if (!entry.is_object() || !entry.contains("residual")) continue;
          std::printf("  %-40s %.3e  %s\n", entry.at("name").get<std::string>().c_str(),
                      entry.at("residual").get<double>(),
                      entry.at("pass").get<bool>() ? "pass" : "FAIL");
        }
      };
      const goa2::Json& cert = result.report_file.at("certification");
      print_invariants(cert.at("algebra").at("invariants"));
      for (const auto& inv : cert.items())
        if (inv.value().is_array()) print_invariants(inv.value());
      if (!certify_out.empty()) write_file(certify_out, result.report_file.dump(2) + "\n");
      return result.exit_code;
    }

    if (app.got_subcommand("verify")) {
      if (verify_mode == "geodesic" && cfg.phi_sources.empty()) {
        std::cerr << "verify --mode geodesic requires at least one --phi\n";
        return kExitUsage;
      }
      VerifyResult result =
          run_verify(verify_key, verify_mode, cfg, collect_params(verify_n, verify_r), echo);
      std::cout << result.summary;
      write_file(verify_out, result.report_file.dump(2) + "\n");
      std::cout << "report written to " << verify_out << "\n";
      return result.exit_code;
    }

    if (app.got_subcommand("table1")) {
      Tolerances tol;
      Table1Result result = run_table1(t1_samples, t1_seed, t1_jobs, tol);
      std::cout << result.markdown;
      if (!t1_out.empty()) {
        std::filesystem::create_directories(t1_out);
        write_file(t1_out + "/table1.md", result.markdown);
        for (const auto& [key, report] : result.rows) {
          write_file(t1_out + "/" + key + ".json",
                     make_report_file(echo, "campaign", to_json(report)).dump(2) + "\n");
        }
      }
      return result.exit_code;
    }
  } catch (const UnknownKeyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotConstructedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PhiParseError& e) {
    std::cerr << "error: profile expression: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PhiDomainError& e) {
    std::cerr << "error: profile rejected: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
