#include "d4cr/report.hpp"

#include <cctype>

#include "json.hpp"

namespace d4cr {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

const std::string* Report::find_detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return &v;
  return nullptr;
}

namespace {

std::string emit_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    arr.push_back({{"scenario", r.scenario},
                   {"claim", r.claim},
                   {"status", to_string(r.status)},
                   {"paper_refs", r.paper_refs},
                   {"details", details},
                   {"notes", r.notes}});
  }
  return arr.dump(2) + "\n";
}

std::string emit_text(const std::vector<Report>& reports) {
  std::string out;
  int passed = 0, failed = 0, errors = 0;
  for (const Report& r : reports) {
    std::string status = to_string(r.status);
    for (char& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out += "[" + status + "] " + r.scenario + ": " + r.claim + "\n";
    for (const std::string& ref : r.paper_refs) out += "  ref: " + ref + "\n";
    for (const auto& [k, v] : r.details) out += "  " + k + " = " + v + "\n";
    for (const std::string& n : r.notes) out += "  NOTE: " + n + "\n";
    switch (r.status) {
      case Status::Pass: ++passed; break;
      case Status::Fail: ++failed; break;
      case Status::Error: ++errors; break;
    }
  }
  out += std::to_string(reports.size()) + " scenarios: " + std::to_string(passed) + " passed, " +
         std::to_string(failed) + " failed, " + std::to_string(errors) + " errors\n";
  return out;
}

}  // namespace

std::string emit(const std::vector<Report>& reports, Format format) {
  return format == Format::Json ? emit_json(reports) : emit_text(reports);
}

}  // namespace d4cr
