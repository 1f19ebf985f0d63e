#pragma once

#include <string>

#include "migrascope/assess.hpp"
#include "migrascope/sim/observe.hpp"

namespace migrascope {

enum class RenderFormat { json, markdown };

struct RenderOptions {
    RenderFormat format = RenderFormat::json;
    bool include_reasoning = true;
    bool include_methodology_footer = true;
};

/// Renders a preservation report. JSON output is canonical and parses back
/// to an equal report; Markdown mirrors the four-column table layout
/// (Feature | Key source primitives | Target support | Mismatch class).
std::string render(const PreservationReport& report, const RenderOptions& options);

/// Renders an agreement matrix, ending with "N/M predictions consistent".
std::string render_agreement(const sim::AgreementMatrix& matrix, const RenderOptions& options);

/// Human-readable feature name: "user-cryptographic-identity" ->
/// "User cryptographic identity".
std::string display_name(const std::string& feature_name);

} // namespace migrascope
