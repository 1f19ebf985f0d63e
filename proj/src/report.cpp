#include "migrascope/report.hpp"

#include <cctype>
#include <sstream>

#include "migrascope/json_util.hpp"

namespace migrascope {

std::string display_name(const std::string& feature_name) {
    std::string out = feature_name;
    for (char& c : out) {
        if (c == '-') {
            c = ' ';
        }
    }
    if (!out.empty()) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

namespace {

std::string display_class(MismatchClass value) {
    return display_name(to_string(value));
}

std::string join(const std::vector<std::string>& parts, const std::string& separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += separator;
        }
        out += parts[i];
    }
    return out;
}

std::string markdown_report(const PreservationReport& report, const RenderOptions& options) {
    std::ostringstream out;
    out << "# Preservation report: " << report.source_platform << " -> "
        << report.target_platform << "\n\n";
    out << "| Feature | Key source primitives | Target support | Mismatch class |\n";
    out << "|---|---|---|---|\n";
    for (const ReportEntry& entry : report.entries) {
        std::vector<std::string> source_cell;
        for (const std::string& id : entry.direct) {
            auto info = report.source_primitives.find(id);
            source_cell.push_back(info != report.source_primitives.end() && !info->second.role.empty()
                                      ? info->second.role
                                      : id);
        }
        std::vector<std::string> target_cell;
        for (const std::string& id : entry.direct) {
            auto verdict = entry.availability.find(id);
            if (verdict == entry.availability.end()) {
                continue;
            }
            std::string text = verdict->second.detail.empty() ? verdict->second.evidence
                                                              : verdict->second.detail;
            target_cell.push_back(text + " [" + to_string(verdict->second.kind) + "]");
        }
        out << "| " << display_name(entry.feature.name) << " | " << join(source_cell, "; ")
            << " | " << join(target_cell, "; ") << " | " << display_class(entry.mismatch)
            << " |\n";
    }
    out << "\n<details>\n<summary>Full dependency closure per feature</summary>\n\n";
    for (const ReportEntry& entry : report.entries) {
        out << "- **" << display_name(entry.feature.name) << "**";
        out << " (" << display_class(entry.mismatch) << ")\n";
        for (const auto& [id, verdict] : entry.availability) {
            out << "  - `" << id << "` " << to_string(verdict.kind);
            if (!verdict.evidence.empty()) {
                out << " via `" << verdict.evidence << "`";
            }
            if (!verdict.detail.empty()) {
                out << ": " << verdict.detail;
            }
            out << "\n";
        }
        if (options.include_reasoning && !entry.reasoning.empty()) {
            out << "  - reasoning: " << entry.reasoning << "\n";
        }
    }
    out << "\n</details>\n";
    if (options.include_methodology_footer) {
        out << "\nMethodology: a required primitive counts as AVAILABLE when the target offers "
               "the same canonical primitive id or a same-layer primitive whose guarantee tags "
               "form a superset; as ALTERNATIVE when every guarantee tag is covered by a curated "
               "realization rule or a direct offering; otherwise ABSENT. A feature is natively "
               "preserved when all its primitives are AVAILABLE, a complete mismatch when any is "
               "ABSENT, and a partial mismatch otherwise.\n";
    }
    return out.str();
}

} // namespace

std::string render(const PreservationReport& report, const RenderOptions& options) {
    if (options.format == RenderFormat::json) {
        return serialize_report(report);
    }
    return markdown_report(report, options);
}

std::string render_agreement(const sim::AgreementMatrix& matrix, const RenderOptions& options) {
    if (options.format == RenderFormat::json) {
        return sim::serialize_agreement(matrix);
    }
    std::ostringstream out;
    out << "# Prediction / observation agreement\n\n";
    out << "| Feature | Predicted class | Observed consistent |\n";
    out << "|---|---|---|\n";
    for (const sim::AgreementRow& row : matrix.rows) {
        out << "| " << display_name(row.feature.name) << " | " << display_class(row.predicted)
            << " | " << (row.consistent ? "yes" : "no") << " |\n";
    }
    if (options.include_reasoning) {
        out << "\n";
        for (const sim::AgreementRow& row : matrix.rows) {
            for (const std::string& line : row.details) {
                out << "- " << row.feature.name << ": " << line << "\n";
            }
        }
    }
    out << "\n" << matrix.summary() << "\n";
    if (options.include_methodology_footer) {
        out << "\nSimulator notes: derived addresses use a SHA-256 digest with a final-byte "
               "off-curve check as a stand-in for curve arithmetic; signatures are hash-based "
               "stand-ins that enforce key-domain separation only.\n";
    }
    return out.str();
}

} // namespace migrascope
