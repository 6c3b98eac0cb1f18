#pragma once

// Seeded invariant suites. Each suite draws from its own generator, seeded
// from the run seed and the suite name, so reports do not depend on the
// order or concurrency in which suites run.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goldknot/knots.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

using Rng = std::mt19937_64;

/// Cyclically reduced class of length between 1 and max_length.
CyclicWord random_class(Rng& rng, int rank, int max_length);
/// Freely reduced word of length between 0 and max_length.
Word random_word(Rng& rng, int rank, int max_length);
/// Random braid on `strands` strands whose closure is a knot.
BraidWord random_knot_braid(Rng& rng, int strands, int max_length);

struct SelftestConfig {
  std::uint64_t seed = 1;
  int jobs = 1;  // 0 = runtime default
  int orbit_bound = 5;
  /// Test hook: negates [x, y] whenever x < y, breaking antisymmetry.
  bool mutate_sign = false;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

std::vector<std::string> selftest_suite_names();
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

std::string format_report_text(const SelftestConfig& config, const std::vector<SuiteResult>& results);
std::string format_report_json(const SelftestConfig& config, const std::vector<SuiteResult>& results);

}  // namespace goldknot
