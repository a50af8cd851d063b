#ifndef GOA2_REPORT_JSON_HPP
#define GOA2_REPORT_JSON_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "goa2/verify.hpp"

namespace goa2 {

using Json = nlohmann::ordered_json;

/// Campaign payload; to_campaign_report(to_json(r)) reproduces r exactly
/// (doubles round-trip through shortest-representation decimal).
Json to_json(const CampaignReport& report);
CampaignReport campaign_report_from_json(const Json& j);

/// Envelope written by the command layer: schema_version "1", the command
/// echo, the payload, and timestamps.
Json make_report_file(const std::string& command, const std::string& kind, Json payload);

Json to_json(const std::vector<InvariantResidual>& residuals);

}  // namespace goa2

#endif
