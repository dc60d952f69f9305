#pragma once

#include <filesystem>
#include <string>

#include "wignerlab/harness.hpp"

namespace wignerlab {

/// Standalone SVG of estimate +- stderr against the swept parameter (N, eta
/// or E, whichever varies; N when nothing does), one series per distinct
/// `series` value, with reference values drawn as dashed lines. Throws
/// DomainError for an empty result.
std::string render_svg(const ExperimentResult& result);

void emit_plot(const ExperimentResult& result, const std::filesystem::path& out);

}  // namespace wignerlab
