#pragma once

#include "gtlab/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtlab {

struct VerifyOptions {
  std::string suite = "all";
  int p = 2;
  int deg = 8;
  int trials = 50;
  std::uint64_t seed = 1;
  // Deliberately breaks one invariant; the run must then fail.
  std::optional<std::string> mutation;
};

const std::vector<std::string>& verify_suites();     // without "all"
const std::vector<std::string>& verify_mutations();

// Deterministic report: identical options give identical JSON. Throws
// DomainError for an unknown suite or mutation or out-of-range options.
Json run_verify(const VerifyOptions& opts);

inline bool report_passed(const Json& report) { return report.at("passed").get<bool>(); }

}  // namespace gtlab
