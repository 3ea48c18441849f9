#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bisetforge {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json data;  // null unless the check carries diagnostics
};

/// Ordered pass/fail checks of one verification stage.
class Report {
 public:
  explicit Report(std::string stage = {}) : stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;

  Check& add(std::string name, bool passed, std::string detail = {}, nlohmann::json data = nullptr);
  /// Appends the checks of other, prefixed by its stage name.
  void merge(const Report& other);
  const Check* find(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string summary() const;

 private:
  std::string stage_;
  std::vector<Check> checks_;
};

}  // namespace bisetforge
