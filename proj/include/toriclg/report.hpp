#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toriclg {

enum class CheckStatus { Pass, Fail, Assumed, Unasserted };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Assumed: return "assumed";
    case CheckStatus::Unasserted: return "unasserted";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<std::vector<long long>> witness;
};

/// A list of named checks. Valid iff nothing failed; assumed/unasserted items are informational.
struct ValidationReport {
  std::vector<Check> checks;

  bool valid() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
  }

  void add(std::string name, CheckStatus status, std::string detail = {},
           std::optional<std::vector<long long>> witness = std::nullopt) {
    checks.push_back({std::move(name), status, std::move(detail), std::move(witness)});
  }

  void pass(std::string name, std::string detail = {}) { add(std::move(name), CheckStatus::Pass, std::move(detail)); }

  void fail(std::string name, std::string detail = {}, std::optional<std::vector<long long>> witness = std::nullopt) {
    add(std::move(name), CheckStatus::Fail, std::move(detail), std::move(witness));
  }

  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) out.push_back(&c);
    return out;
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace toriclg
