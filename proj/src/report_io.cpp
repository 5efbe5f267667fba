#include "etcs/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace etcs {

namespace {

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << ' ' << verdict_name(r.verdict)
        << " instances=" << r.stats.instances
        << " elapsed=" << r.stats.elapsed_ms << "ms";
    if (!r.witness.empty()) {
      out << " witness{";
      for (std::size_t i = 0; i < r.witness.size(); ++i) {
        if (i) out << "; ";
        out << r.witness[i].first << "=" << r.witness[i].second;
      }
      out << "}";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json entry;
    entry["axiom_id"] = r.id;
    entry["instance"] = r.instance;
    entry["verdict"] = verdict_name(r.verdict);
    if (!r.witness.empty()) {
      nlohmann::ordered_json w;
      for (const auto& [k, v] : r.witness) w[k] = v;
      entry["witness"] = std::move(w);
    }
    entry["stats"] = {{"instances", r.stats.instances},
                      {"elapsed_ms", r.stats.elapsed_ms}};
    doc["reports"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_reports(const std::vector<Report>& reports,
                           ReportFormat format) {
  return format == ReportFormat::text ? render_text(reports)
                                      : render_json(reports);
}

}  // namespace etcs
