#include "bisetforge/report.hpp"

#include <algorithm>
#include <sstream>

namespace bisetforge {

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

Check& Report::add(std::string name, bool passed, std::string detail, nlohmann::json data) {
  checks_.push_back({std::move(name), passed, std::move(detail), std::move(data)});
  return checks_.back();
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!other.stage_.empty()) copy.name = other.stage_ + "/" + copy.name;
    checks_.push_back(std::move(copy));
  }
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.data.is_null()) j["data"] = c.data;
    checks.push_back(std::move(j));
  }
  return {{"stage", stage_}, {"status", passed() ? "pass" : "fail"}, {"checks", checks}};
}

std::string Report::summary() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.name.size());
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << std::string(width + 2 - c.name.size(), ' ') << c.detail;
    os << "\n";
  }
  os << stage_ << ": " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace bisetforge
