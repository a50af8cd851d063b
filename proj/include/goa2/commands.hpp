#ifndef GOA2_COMMANDS_HPP
#define GOA2_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goa2/catalog.hpp"
#include "goa2/report_json.hpp"
#include "goa2/verify.hpp"

namespace goa2 {

/// Exit-code contract shared by the command line and the test suites:
/// 0 verified / 1 falsified-or-certification-failure / 2 usage-or-unknown /
/// 3 indeterminate.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIndeterminate = 3;

/// Resolves a registry key (+ params, + Wallach split) to the decomposition
/// a given campaign mode runs on. Wallach keys use the derived triple
/// (m_F = m_i) for condition-i/theta and the swapped split (m2 = m_i) for
/// geodesic/theorem2.
DecomposedSpace space_for_mode(const std::string& key, const std::string& mode,
                               const Params& params, int split);

struct VerifyResult {
  CampaignReport report;
  Json report_file;
  std::string summary;
  int exit_code = kExitUsage;
};

/// Runs one campaign; `mode` is one of condition-i | geodesic | theta |
/// theorem2. Throws UnknownKeyError / NotConstructedError / ContractError
/// for bad inputs (callers map those to exit 2).
VerifyResult run_verify(const std::string& key, const std::string& mode,
                        const CampaignConfig& cfg, const Params& params,
                        const std::string& command_echo);

struct CertifyResult {
  Json report_file;
  bool pass = false;
  std::string summary;
  int exit_code = kExitUsage;
};

/// Certifies a registry entry: algebra invariant suite, decomposition
/// invariants, dimension counts, and a sampled bracket-containment check.
CertifyResult run_certify(const std::string& key, const Params& params,
                          const std::string& command_echo);

struct Table1Result {
  std::string markdown;
  std::vector<std::pair<std::string, CampaignReport>> rows;  // constructed rows
  int exit_code = kExitUsage;
};

/// Runs the pair-condition campaign over every summary-table row at default
/// parameters and renders the fixed Markdown summary (byte-stable for a
/// fixed seed).
Table1Result run_table1(int samples, std::uint64_t seed, int jobs, const Tolerances& tol);

}  // namespace goa2

#endif
