#include "permorbit/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace permorbit {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

CheckResult& VerificationReport::add(CheckResult c) {
  if (c.status == Status::fail && c.witness.is_null()) {
    c.witness = json{{"computed", c.computed}};
  }
  checks_.push_back(std::move(c));
  return checks_.back();
}

CheckResult& VerificationReport::expect_equal(std::string name, const json& expected, const json& computed,
                                              std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = expected;
  c.computed = computed;
  c.status = expected == computed ? Status::pass : Status::fail;
  c.detail = std::move(detail);
  return add(std::move(c));
}

CheckResult& VerificationReport::expect_true(std::string name, bool ok, std::string detail, json witness) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = true;
  c.computed = ok;
  c.status = ok ? Status::pass : Status::fail;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  return add(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (CheckResult c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  seconds_ += other.seconds_;
}

Status VerificationReport::status() const {
  bool any_pass = false;
  for (const auto& c : checks_) {
    if (c.status == Status::fail) return Status::fail;
    any_pass = any_pass || c.status == Status::pass;
  }
  return any_pass || checks_.empty() ? Status::pass : Status::skipped;
}

json VerificationReport::to_json() const {
  json checks = json::array();
  for (const auto& c : checks_) {
    json j{{"name", c.name}, {"status", to_string(c.status)}, {"seconds", c.seconds}};
    if (!c.expected.is_null()) j["expected"] = c.expected;
    if (!c.computed.is_null()) j["computed"] = c.computed;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return json{{"schema_version", kSchemaVersion},
              {"report", name_},
              {"status", to_string(status())},
              {"seconds", seconds_},
              {"checks", std::move(checks)}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema version");
  }
  VerificationReport r(j.at("report").get<std::string>());
  r.seconds_ = j.value("seconds", 0.0);
  for (const auto& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.status = status_from_string(cj.at("status").get<std::string>());
    c.seconds = cj.value("seconds", 0.0);
    if (cj.contains("expected")) c.expected = cj["expected"];
    if (cj.contains("computed")) c.computed = cj["computed"];
    if (cj.contains("witness")) c.witness = cj["witness"];
    c.detail = cj.value("detail", std::string{});
    r.checks_.push_back(std::move(c));
  }
  return r;
}

namespace {

std::string compact(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "== " << name_ << " ==\n";
  for (const auto& c : checks_) {
    out << std::left << std::setw(10) << ("[" + to_string(c.status) + "]") << c.name << ':';
    if (!c.expected.is_null()) {
      out << " expected " << compact(c.expected) << ", computed " << compact(c.computed);
    } else if (!c.computed.is_null()) {
      out << ' ' << compact(c.computed);
    }
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    if (c.status == Status::fail && !c.witness.is_null()) out << "  witness " << compact(c.witness);
    out << '\n';
  }
  out << to_string(status()) << ": " << checks_.size() << " checks in " << std::fixed << std::setprecision(2)
      << seconds_ << " s\n";
  return out.str();
}

bool operator==(const CheckResult& a, const CheckResult& b) {
  return a.name == b.name && a.status == b.status && a.expected == b.expected && a.computed == b.computed &&
         a.witness == b.witness && a.detail == b.detail && a.seconds == b.seconds;
}

}  // namespace permorbit
