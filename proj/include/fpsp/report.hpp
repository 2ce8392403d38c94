#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpsp/theorems.hpp"

namespace fpsp {

/// Sweep output. `envelope` holds timings and timestamps; everything else is
/// a deterministic function of the config.
struct Report {
    nlohmann::json config = nlohmann::json::object();
    std::vector<RatioRow> rows;
    nlohmann::json chains = nlohmann::json::array();
    nlohmann::json aggregates = nlohmann::json::object();
    nlohmann::json envelope = nlohmann::json::object();
    std::size_t exact_failures = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const RatioRow& r);
RatioRow row_from_json(const nlohmann::json& j);

/// Per theorem: count, hypothesis count, min / median / max ratio (NaN ratios skipped).
nlohmann::json aggregate_rows(const std::vector<RatioRow>& rows);

nlohmann::json report_to_json(const Report& r, bool with_envelope = true);
Report report_from_json(const nlohmann::json& j);

inline const char* kCsvHeader = "theorem,p,family,seed,|A|,|B|,|C|,|D|,m,lhs,rhs,ratio,hyp_ok";

std::string rows_to_csv(const std::vector<RatioRow>& rows);
std::vector<RatioRow> rows_from_csv(const std::string& text);

enum class ReportFormat { Json, Csv };

/// CSV carries the ratio rows only.
void write_report(const std::filesystem::path& path, const Report& r, ReportFormat fmt);
Report read_report(const std::filesystem::path& path, ReportFormat fmt);

}  // namespace fpsp
