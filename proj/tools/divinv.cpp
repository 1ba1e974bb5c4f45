#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "divinv/errors.hpp"
#include "divinv/report.hpp"

using namespace divinv;

namespace {

std::vector<std::string> split_suites(const std::string& text) {
  std::vector<std::string> out;
  if (text == "all") return all_suites();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void add_common(CLI::App& cmd, RunConfig& c, std::string& triples, std::string& suites) {
  cmd.add_option("--p", c.params.p, "residue characteristic")->capture_default_str();
  cmd.add_option("--e", c.params.e, "q = p^e")->capture_default_str();
  cmd.add_option("--n", c.params.n, "degree of the division algebra")->capture_default_str();
  cmd.add_option("--m", c.params.m, "truncation level")->capture_default_str();
  cmd.add_option("--suites", suites, "comma-separated suites, 'all', or empty")->capture_default_str();
  cmd.add_option("--triples", triples, "exhaustive | sample:COUNT")->capture_default_str();
  cmd.add_option("--seed", c.seed, "seed for splitting, sampling and oracle points")->capture_default_str();
  cmd.add_option("--out", c.out, "write the report here instead of stdout");
  cmd.add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd.add_option("--cache-dir", c.cache_dir, "character table cache (default: $DIVINV_CACHE_DIR)");
  cmd.add_option("--tol", c.tolerance, "oracle relative tolerance")->capture_default_str();
  cmd.add_option("--shells", c.shells, "oracle shell count N")->capture_default_str();
  cmd.add_flag("!--raw-oracle", c.close_tails, "sum shells -N..N only, without closing the tails");
  cmd.add_option("--samples", c.oracle_samples, "oracle sample points")->capture_default_str();
  cmd.add_option("--max-group-order", c.max_group_order, "refuse larger groups")->capture_default_str();
  cmd.add_option("--threads", c.threads, "workers for pair records")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite quotients of a p-adic division algebra"};
  app.require_subcommand(1);

  RunConfig compute_cfg;
  compute_cfg.command = "compute";
  std::string compute_triples = "exhaustive", compute_suites;
  auto* compute = app.add_subcommand("compute", "group, character table and invariants");
  add_common(*compute, compute_cfg, compute_triples, compute_suites);

  RunConfig verify_cfg;
  verify_cfg.command = "verify";
  std::string verify_triples = "exhaustive", verify_suites = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(*verify, verify_cfg, verify_triples, verify_suites);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  const bool is_compute = compute->parsed();
  RunConfig config = is_compute ? compute_cfg : verify_cfg;
  try {
    config.suites = split_suites(is_compute ? compute_suites : verify_suites);
    config.triples = TriplePolicy::parse(is_compute ? compute_triples : verify_triples);
    const Report report = run_suite(config);
    const std::string text = emit_report(report);
    if (config.out.empty()) std::cout << text;
    std::cerr << "cache: " << to_string(report.cache) << "\n";
    for (const auto& s : report.suites) {
      std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks, "
                << s.violations << " violations)\n";
    }
    return report.passed() ? kExitPass : kExitViolations;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
