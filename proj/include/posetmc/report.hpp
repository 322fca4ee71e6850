#pragma once

#include <string>
#include <vector>

#include "posetmc/types.hpp"

namespace posetmc {

// One named condition and, when it fails, the lexicographically least
// counterexample found.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
  std::string detail;
};

class Report {
 public:
  Report() = default;

  void add(Check check) { checks_.push_back(std::move(check)); }
  void pass(std::string name) { checks_.push_back({std::move(name), true, {}, {}}); }
  void fail(std::string name, std::vector<Element> witness, std::string detail = {}) {
    checks_.push_back({std::move(name), false, std::move(witness), std::move(detail)});
  }
  // Appends other's checks, prefixing their names with "<prefix>.".
  void merge(const std::string& prefix, const Report& other);

  bool passed() const noexcept;
  const Check* find(const std::string& name) const noexcept;
  const Check* first_failure() const noexcept;
  const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

inline void Report::merge(const std::string& prefix, const Report& other) {
  for (Check c : other.checks_) {
    c.name = prefix.empty() ? c.name : prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

inline bool Report::passed() const noexcept {
  for (const Check& c : checks_)
    if (!c.passed) return false;
  return true;
}

inline const Check* Report::find(const std::string& name) const noexcept {
  for (const Check& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

inline const Check* Report::first_failure() const noexcept {
  for (const Check& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

}  // namespace posetmc
