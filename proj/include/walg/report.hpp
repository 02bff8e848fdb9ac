#pragma once

#include <string>
#include <vector>

namespace walg {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back(Check{std::move(name), passed, std::move(detail)});
  }
  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(Check{other.title + ": " + c.name, c.passed, c.detail});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace walg
