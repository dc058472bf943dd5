#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace permorbit {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  nlohmann::json expected;
  nlohmann::json computed;
  /// Orbit representatives, conjugating elements and the like. A failed
  /// check always carries one (the computed value if nothing better).
  nlohmann::json witness;
  std::string detail;
  double seconds = 0.0;
};

class VerificationReport {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit VerificationReport(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  double seconds() const noexcept { return seconds_; }
  void set_seconds(double s) noexcept { seconds_ = s; }

  CheckResult& add(CheckResult c);
  /// Pass iff computed == expected.
  CheckResult& expect_equal(std::string name, const nlohmann::json& expected, const nlohmann::json& computed,
                            std::string detail = {});
  CheckResult& expect_true(std::string name, bool ok, std::string detail = {},
                           nlohmann::json witness = nullptr);
  /// Appends the checks of another report, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  /// fail if any check failed, skipped if every check was skipped, else pass.
  Status status() const;
  bool passed() const { return status() != Status::fail; }

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  /// One line per check: status, name, then expected/computed or detail.
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<CheckResult> checks_;
  double seconds_ = 0.0;
};

bool operator==(const CheckResult& a, const CheckResult& b);

/// Wall-clock seconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace permorbit
