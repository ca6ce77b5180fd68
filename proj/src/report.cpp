#include "freegroup/report.hpp"

#include <stdexcept>
#include <tuple>

#include "freegroup/error.hpp"

namespace fg {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "fail";
}

Status status_from_string(std::string_view text) {
  if (text == "pass") return Status::kPass;
  if (text == "fail") return Status::kFail;
  if (text == "budget-exhausted") return Status::kBudgetExhausted;
  throw PreconditionError("unknown status '" + std::string(text) + "'");
}

void VerificationReport::fail(std::string witness) {
  status = Status::kFail;
  witnesses.push_back(std::move(witness));
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  return {
      {"check", report.check_name},
      {"params", params},
      {"status", std::string(to_string(report.status))},
      {"witnesses", report.witnesses},
      {"elapsed_ms", report.elapsed_ms},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.check_name = j.at("check").get<std::string>();
  for (const auto& [key, value] : j.at("params").items()) report.params[key] = value.get<std::int64_t>();
  report.status = status_from_string(j.at("status").get<std::string>());
  report.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return report;
}

bool report_order(const VerificationReport& lhs, const VerificationReport& rhs) {
  return std::tie(lhs.check_name, lhs.params) < std::tie(rhs.check_name, rhs.params);
}

}  // namespace fg
