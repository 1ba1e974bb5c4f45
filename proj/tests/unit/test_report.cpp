#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "divinv/errors.hpp"
#include "divinv/report.hpp"

using namespace divinv;
namespace fs = std::filesystem;

namespace {
fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("divinv-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}
}  // namespace

TEST_CASE("Sym(3) model end to end") {
  RunConfig c;
  c.params = {2, 1, 2, 1};
  c.suites = all_suites();
  const auto r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.irreps.size() == 3);
  CHECK(r.suites.size() == all_suites().size());
  const auto doc = report_json(r);
  CHECK(doc["group"]["degree_profile"] == nlohmann::json{{"1", 2}, {"2", 1}});
  CHECK(doc["status"] == "pass");
  // canonical serialization round-trips
  const std::string text = doc.dump(2);
  CHECK(nlohmann::json::parse(text).dump(2) == text);

  c.format = "csv";
  const auto csv = report_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  bool found = false;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
    if (rows > 0 && line.find(",d2-") != std::string::npos && line.rfind("d1-", 0) == 0 &&
        line.find(",1,2,") != std::string::npos) {
      // (trivial or sign, rho): dist 1, inv 8/9, t_pair 0, f = f~ = 4
      CHECK(line.substr(line.find(",1,2,")) == ",1,2,1,8,9,0,2,4,4");
      found = true;
    }
    ++rows;
  }
  CHECK(rows == 7);
  CHECK(found);
}

TEST_CASE("empty suite set yields the group summary only") {
  RunConfig c;
  c.params = {2, 1, 2, 2};
  const auto r = run_suite(c);
  CHECK(r.suites.empty());
  CHECK(r.pairs.empty());
  const auto doc = report_json(r);
  CHECK(doc["group"]["order"] == 24);
  CHECK(doc["pairs"].empty());
}

TEST_CASE("configuration errors") {
  RunConfig c;
  c.suites = {"nonsense"};
  CHECK_THROWS_AS(run_suite(c), Error);
  CHECK_THROWS_AS(TriplePolicy::parse("sample:"), Error);
  CHECK(TriplePolicy::parse("sample:25").count == 25);
  CHECK(TriplePolicy::parse("exhaustive").exhaustive);
  RunConfig big;
  big.params = {3, 1, 2, 2};
  big.suites = {"ultrametric"};
  big.triples.exhaustive_cap = 100;
  CHECK_THROWS_AS(run_suite(big), Error);
  RunConfig bounded;
  bounded.params = {2, 1, 2, 3};
  bounded.max_group_order = 50;
  try {
    (void)run_suite(bounded);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBound);
  }
}

TEST_CASE("table cache: miss, hit, corruption, version mismatch") {
  const auto dir = scratch_dir("cache");
  const auto g = UnitGroup::build(FieldTower::build(2, 1, 2), 2);
  const auto first = cache_get_or_build(*g, 5, dir.string());
  CHECK(first.status == CacheStatus::Miss);
  const auto second = cache_get_or_build(*g, 5, dir.string());
  CHECK(second.status == CacheStatus::Hit);
  CHECK(second.table.values == first.table.values);
  CHECK(second.table.labels == first.table.labels);

  const auto path = cache_file(dir, g->params(), first.table.ell, 5);
  REQUIRE(fs::exists(path));
  { std::ofstream(path) << "{ not json"; }
  const auto third = cache_get_or_build(*g, 5, dir.string());
  CHECK(third.status == CacheStatus::Rebuilt);
  CHECK_FALSE(third.message.empty());
  CHECK(third.table.values == first.table.values);

  auto doc = table_to_json(first.table, g->params());
  doc["format_version"] = kCacheFormatVersion + 1;
  { std::ofstream(path) << doc.dump(); }
  CHECK(cache_get_or_build(*g, 5, dir.string()).status == CacheStatus::Rebuilt);

  // a value flipped in the stored table fails the spot check
  doc = table_to_json(first.table, g->params());
  auto bad = first.table;
  bad.degrees[1] += 1;
  CHECK_FALSE(spot_check_table(bad, 5));
  CHECK(spot_check_table(first.table, 5));
  CHECK(cache_get_or_build(*g, 5, "").status == CacheStatus::Disabled);
  fs::remove_all(dir);
}
