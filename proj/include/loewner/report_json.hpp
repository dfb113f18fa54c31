#pragma once

// JSON / CSV serialization for campaign configs, campaign reports, solver
// reports and search results. The report schema is described in README.md.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "loewner/equations.hpp"
#include "loewner/harness.hpp"

namespace loewner {

/// Malformed config or report document.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kReportSchema = "loewner-lab/campaign-report/1";

enum class ReportFormat { json, csv };

/// Fields absent from the document keep the values of default_campaign_config().
[[nodiscard]] CampaignConfig campaign_config_from_json(const nlohmann::json& doc);
[[nodiscard]] CampaignConfig read_campaign_config(const std::string& path);

[[nodiscard]] nlohmann::json to_json(const CampaignReport& report, bool include_wall_time = true);
[[nodiscard]] CampaignReport campaign_report_from_json(const nlohmann::json& doc);
[[nodiscard]] std::string report_to_csv(const CampaignReport& report);
[[nodiscard]] std::string render_report(const CampaignReport& report, ReportFormat format,
                                        bool include_wall_time = true);

/// Writes the report; "-" means stdout. I/O failures throw std::runtime_error.
void emit_report(const CampaignReport& report, const std::string& path, ReportFormat format);

[[nodiscard]] nlohmann::json to_json(const SolutionReport& report);
[[nodiscard]] nlohmann::json to_json(const SearchResult& result, InequalityFamily family,
                                     const ParamSet& params);
[[nodiscard]] nlohmann::json matrix_to_json(const HermitianMatrix& m);

}  // namespace loewner
