#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freegroup/gn_construction.hpp"
#include "freegroup/report.hpp"

namespace fg::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kText, kJson };

struct CliConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> i;
  std::optional<std::string> lemma;
  Format format = Format::kText;
  std::optional<std::size_t> budget;
  int max_len = 6;
  TwistConvention convention = TwistConvention::kRight;
};

/// Runs one invocation; `args` excludes the program name.
/// Exit codes: 0 pass/true, 1 fail/false, 2 usage or internal error.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

/// Every certificate applicable at n, sorted by check name then params.
struct VerifyRun {
  std::vector<VerificationReport> reports;
  std::vector<std::string> skipped;
  bool passed() const;
};

VerifyRun run_all(const CliConfig& config);

}  // namespace fg::cli
