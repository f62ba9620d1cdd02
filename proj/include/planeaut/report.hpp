#pragma once

#include <string>
#include <vector>

namespace planeaut {

/// One verification record.
struct Check {
  std::string check;
  std::string parameters;
  std::string expected;
  std::string got;
  bool pass = false;
};

class Report {
 public:
  void add(std::string check, std::string parameters, std::string expected, std::string got, bool pass) {
    checks_.push_back({std::move(check), std::move(parameters), std::move(expected), std::move(got), pass});
  }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }

  /// One line per check: "check [parameters] expected=... got=... pass|FAIL".
  std::string to_text() const;
  /// One JSON object per line with keys check, parameters, expected, got, pass.
  std::string to_json_lines() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace planeaut
