#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace joints {

inline constexpr const char* kReportFormat = "joints-report/1";

const char* tool_version();

struct RunOptions {
  std::string command;  // joints | partition | curves | incidences | generate
  std::optional<std::string> gen;
  std::optional<std::string> input;
  std::string format = "json";  // json | csv
  std::uint64_t seed = 1;
  std::optional<double> degree;
  int max_iter = 400;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> n;
  bool verify = false;
  bool timings = false;
};

struct RunResult {
  std::string text;
  bool verification_failed = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // usage, parse and engine errors
inline constexpr int kExitVerificationFailed = 2;

inline int exit_code(const RunResult& result) {
  return result.verification_failed ? kExitVerificationFailed : kExitOk;
}

/// Runs one pipeline and renders its report. Throws Error for usage, parse and
/// engine errors; verification failures are reported, not thrown.
RunResult run(const RunOptions& options);

}  // namespace joints
