#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wignerlab/harness.hpp"
#include "wignerlab/minor_diagnostics.hpp"

namespace wignerlab {

/// Column order of the CSV result table.
inline constexpr std::string_view kCsvHeader =
    "n,energy,eta,mean,stderr,samples,reference,ratio,series,sample_max";

/// One line per row, numbers in shortest round-trip form, NaN as "nan".
std::string to_csv(const std::vector<ResultRow>& rows);

/// Inverse of to_csv. Throws ConfigError on malformed input.
std::vector<ResultRow> parse_csv(std::string_view text);

nlohmann::json to_json(const DistributionSpec& dist);
DistributionSpec distribution_from_json(const nlohmann::json& j, EntryRole role);

/// Canonical spec echo; spec_from_json accepts it as well as the shorthand
/// forms described in the README ("n": 128, "eta_over_n": 2, "dist": "gaussian").
nlohmann::json to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const nlohmann::json& j);

/// Overwrites fields of `base` with those present in `j`.
void merge_spec_json(ExperimentSpec& base, const nlohmann::json& j);

/// {spec, rows[], warnings[], wall_time_s, kernel, version}
nlohmann::json to_json(const ExperimentResult& result);

nlohmann::json to_json(const MinorDiagnostics& diag);

/// Writes text to a file, throwing Error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace wignerlab
