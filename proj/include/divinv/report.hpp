#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "divinv/cache.hpp"
#include "divinv/checks.hpp"

namespace divinv {

inline constexpr int kReportSchemaVersion = 1;

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"cliff",      "invariants", "conductor-integrality",
                                              "ultrametric", "plancherel", "oracle", "norms"};
  return names;
}

struct TriplePolicy {
  bool exhaustive = true;
  std::size_t count = 0;  // sampled only
  /// Largest (#irreps)^3 accepted for exhaustive runs.
  std::uint64_t exhaustive_cap = 2'000'000;

  /// "exhaustive" or "sample:COUNT".
  static TriplePolicy parse(const std::string& text);
  std::string to_string() const;
};

struct RunConfig {
  std::string command = "verify";
  GroupParams params;
  std::vector<std::string> suites;
  TriplePolicy triples;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string cache_dir;
  double tolerance = 1e-9;
  std::int64_t shells = 60;
  bool close_tails = true;
  std::size_t oracle_samples = 5;
  std::uint64_t max_group_order = UnitGroup::kDefaultOrderBound;
  unsigned threads = 1;
};

struct Report {
  RunConfig config;
  std::uint64_t group_order = 0, exponent = 0, ell = 0;
  std::size_t classes = 0;
  std::vector<IrrepRecord> irreps;
  std::vector<InvariantRecord> pairs;
  std::vector<MuInverse> mu;  // parallel to pairs
  std::vector<SuiteOutcome> suites;
  CacheStatus cache = CacheStatus::Disabled;
  std::string cache_message;

  bool passed() const;
};

/// Runs the pipeline. Throws on execution errors; violations are data.
Report run_suite(const RunConfig& config);

nlohmann::json rational_json(const BigRational& x);
nlohmann::json laurent_json(const LaurentPoly& p);
nlohmann::json report_json(const Report& report);
std::string report_csv(const Report& report);

/// Serialized report in config.format; written to config.out or returned.
std::string emit_report(const Report& report);

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitError = 2;

}  // namespace divinv
