#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fg {

enum class Status { kPass, kFail, kBudgetExhausted };

std::string_view to_string(Status status);
Status status_from_string(std::string_view text);

/// Outcome of one certificate. A failing report always names at least one witness.
struct VerificationReport {
  std::string check_name;
  std::map<std::string, std::int64_t> params;
  Status status = Status::kPass;
  std::vector<std::string> witnesses;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::kPass; }
  void fail(std::string witness);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline VerificationReport new_report(std::string check_name, std::map<std::string, std::int64_t> params) {
  VerificationReport report;
  report.check_name = std::move(check_name);
  report.params = std::move(params);
  return report;
}

/// {"check", "params", "status", "witnesses", "elapsed_ms"}
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// Sort key for deterministic output: check name, then params.
bool report_order(const VerificationReport& lhs, const VerificationReport& rhs);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fg
