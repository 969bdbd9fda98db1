#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopf {

/// One named verification with an optional witness or note on failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered list of checks; ordering is deterministic and part of the output.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const VerificationReport& o, const std::string& prefix = "") {
    for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t fail_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return "";
  }
  std::string summary() const {
    std::string s = std::to_string(checks.size() - fail_count()) + "/" + std::to_string(checks.size()) + " checks passed";
    if (!all_pass()) s += "; first failure: " + first_failure();
    return s;
  }
};

}  // namespace hopf
