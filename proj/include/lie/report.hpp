// Verification reports: one row per checked claim with computed vs expected
// values, grouped into sections, serializable as JSON or markdown.  Output is
// deterministic for fixed inputs and engine version.
#pragma once

#include <string>
#include <vector>

namespace lie {

constexpr const char* kEngineName = "lieverify";
constexpr const char* kEngineVersion = "1.0.0";

enum class Status { Pass, Fail, Skip };

struct ReportItem {
  std::string id;
  std::string label;
  std::string computed;
  std::string expected;
  Status status = Status::Pass;
};

struct ReportSection {
  std::string name;
  std::vector<ReportItem> items;

  void check(const std::string& id, const std::string& label, const std::string& computed,
             const std::string& expected) {
    items.push_back(
        {id, label, computed, expected, computed == expected ? Status::Pass : Status::Fail});
  }
  template <typename T>
  void check_eq(const std::string& id, const std::string& label, const T& computed,
                const T& expected) {
    check(id, label, std::to_string(computed), std::to_string(expected));
  }
  void record(const std::string& id, const std::string& label, const std::string& value) {
    items.push_back({id, label, value, value, Status::Skip});
  }
  void fail(const std::string& id, const std::string& label, const std::string& message) {
    items.push_back({id, label, message, "", Status::Fail});
  }
};

struct VerificationReport {
  std::vector<ReportSection> sections;

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  std::string to_json() const;
  std::string to_markdown() const;
};

}  // namespace lie
