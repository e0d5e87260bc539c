#pragma once

// Named invariant suites. Each property reports how many of its sampled or
// enumerated instances held; a suite passes when every property is full.

#include "nlfield/arith.hpp"
#include "nlfield/numfield.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nlf {

struct VerifyConfig {
  std::size_t N = 0;        // 0: the suite's own default truncation
  u64 P = 100;              // prime bound for prime-vector checks
  std::size_t samples = 0;  // 0: the suite's own default sample count
  double tol = 1e-10;
  unsigned precision_cap = kDefaultPrecisionCap;
  std::uint64_t seed = 1;
  u64 M = 1;                  // torus level for orthonormality
  std::size_t points = 4096;  // quadrature grid size
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;

  bool ok() const { return passed == total; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  double seconds = 0.0;

  bool ok() const;
  std::string to_text() const;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw ParseError.
std::vector<SuiteReport> run_suite(std::string_view name, const VerifyConfig& cfg);

}  // namespace nlf
