#pragma once

// Subcommand implementations behind the goldknot executable. Each writes
// its result to `out` and returns the process exit code; errors are thrown
// as goldknot::Error.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "goldknot/knots.hpp"
#include "goldknot/liealg.hpp"
#include "goldknot/selftest.hpp"

namespace goldknot {

enum class OutputFormat { kJson, kText };

struct RunConfig {
  OutputFormat format = OutputFormat::kJson;
  int orbit_bound = kDefaultOrbitBound;
  std::uint64_t seed = 1;
  int jobs = 0;
};

/// A knot named on the command line: a catalog entry, a registered custom
/// model, or a braid word. Only the first two carry a fibration.
struct KnotHandle {
  std::string label;
  std::optional<BraidWord> braid;
  std::shared_ptr<const FiberedKnotModel> model;
};

/// Catalog names win, then custom models, then the braid grammar.
KnotHandle resolve_knot(const std::string& text, std::optional<int> strands,
                        const std::vector<std::shared_ptr<const FiberedKnotModel>>& custom = {});

/// The fibered model, or a scope error.
const FiberedKnotModel& require_fibered(const KnotHandle& knot);

enum class Quotient { kNone, kPi, kHomology };

int cmd_knot_info(const RunConfig& config, const KnotHandle& knot, std::ostream& out);
int cmd_alexander(const RunConfig& config, const KnotHandle& knot, std::ostream& out);
int cmd_presentation(const RunConfig& config, const KnotHandle& knot, bool cover, std::ostream& out);
int cmd_bracket(const RunConfig& config, const KnotHandle& knot, const std::string& w1, const std::string& w2,
                Quotient quotient, std::ostream& out);
/// All brackets among nontrivial classes of length <= max_length.
int cmd_table(const RunConfig& config, const KnotHandle& knot, int max_length, std::ostream& out);
int cmd_selftest(const RunConfig& config, bool mutate_sign, std::ostream& out);

/// Canonical classes of length 1..max_length in the given rank, ordered by
/// (length, letters).
std::vector<CyclicWord> enumerate_classes(int rank, int max_length);

}  // namespace goldknot
