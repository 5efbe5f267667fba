#pragma once

#include <string>
#include <vector>

#include "etcs/verifier.hpp"

namespace etcs {

enum class ReportFormat { text, json };

/// Renders reports deterministically: identical report lists produce
/// byte-identical output. Text is one line per report (id, verdict,
/// stats, witness on failure); json is a versioned document
/// {version, reports: [{axiom_id, instance, verdict, witness?, stats}]}.
std::string render_reports(const std::vector<Report>& reports,
                           ReportFormat format);

}  // namespace etcs
