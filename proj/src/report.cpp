#include "lie/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lie {

namespace {
const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skipped";
  }
}
}  // namespace

int VerificationReport::count(Status s) const {
  int n = 0;
  for (auto& sec : sections)
    for (auto& it : sec.items)
      if (it.status == s) ++n;
  return n;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"skipped", count(Status::Skip)}};
  j["sections"] = nlohmann::ordered_json::array();
  for (auto& sec : sections) {
    nlohmann::ordered_json js;
    js["name"] = sec.name;
    js["items"] = nlohmann::ordered_json::array();
    for (auto& it : sec.items) {
      js["items"].push_back({{"id", it.id},
                             {"label", it.label},
                             {"computed", it.computed},
                             {"expected", it.expected},
                             {"status", status_str(it.status)}});
    }
    j["sections"].push_back(js);
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_markdown() const {
  std::ostringstream os;
  os << "# " << kEngineName << " " << kEngineVersion << " report\n\n";
  os << "pass: " << count(Status::Pass) << "  fail: " << count(Status::Fail)
     << "  skipped: " << count(Status::Skip) << "\n";
  for (auto& sec : sections) {
    os << "\n## " << sec.name << "\n\n";
    os << "| id | claim | computed | expected | status |\n";
    os << "|---|---|---|---|---|\n";
    for (auto& it : sec.items)
      os << "| " << it.id << " | " << it.label << " | " << it.computed << " | " << it.expected
         << " | " << status_str(it.status) << " |\n";
  }
  return os.str();
}

}  // namespace lie
