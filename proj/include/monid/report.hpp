#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monid/corpus.hpp"
#include "monid/oracles.hpp"

namespace monid {

struct ReportOptions {
  bool run_oracles = true;
  SdepthCaps sdepth_caps;
  BettiCaps betti_caps;
  std::uint64_t split_cap = kDefaultSplitCap;
  std::size_t verify_box_cap = kDefaultVerifyBoxCap;
  /// Search all variable orders when the ring order is not WPM.
  bool find_order = false;
  std::size_t order_search_limit = 9;
};

/// One checked inequality. Only comparisons whose sides were both computed
/// are recorded.
struct Comparison {
  std::string tag;       // stable identifier of the fact being checked
  std::string relation;  // "<=", ">=", "==" or "holds"
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  bool pass = false;
  std::string detail;
};

struct Report {
  nlohmann::ordered_json body;  // everything except comparisons
  std::vector<Comparison> comparisons;

  std::size_t violations() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs every computation that applies to the ideal and is within the caps,
/// and records each supported inequality. Rejects the zero and unit ideals.
Report build_report(const MonomialIdeal& ideal, const ReportOptions& options = {});

/// Exit status for a report: 0, or 3 when any comparison failed.
int exit_code_for(const Report& report);

struct CorpusSummary {
  std::size_t instances = 0;
  std::size_t violations = 0;
};

/// One report per line (JSON lines), then "violations: k".
CorpusSummary run_corpus(const CorpusSpec& spec, const ReportOptions& options, std::ostream& out);

inline constexpr int kExitInputError = 1;
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitViolation = 3;

} // namespace monid
