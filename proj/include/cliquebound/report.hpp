#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquebound/harness.hpp"

namespace cliquebound {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Jsonl, Csv };

ReportFormat parse_report_format(const std::string& name);

// One flat object per record: spectrum fields at top level, evaluations as
// an object keyed by bound id in BoundId order.
Json record_to_json(const GraphRecord& record);
GraphRecord record_from_json(const Json& j);

Json summary_to_json(const CampaignSummary& summary);
Json kneser_rows_to_json(const std::vector<KneserRow>& rows);

void write_jsonl(std::ostream& out, const std::vector<GraphRecord>& records);

// Columns: the scalar record fields, then "<id>.value" and "<id>.slack" for
// every bound id. Missing values are empty cells.
std::vector<std::string> csv_header();
void write_csv(std::ostream& out, const std::vector<GraphRecord>& records);

// Records go to `path` in the chosen format and the summary to
// `path` + ".summary.json". Throws InputError if either cannot be written.
void write_report(const std::vector<GraphRecord>& records, const CampaignSummary& summary, ReportFormat format,
                  const std::filesystem::path& path);

}  // namespace cliquebound
