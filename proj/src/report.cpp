#include "divinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "divinv/errors.hpp"

namespace divinv {

using nlohmann::json;

TriplePolicy TriplePolicy::parse(const std::string& text) {
  TriplePolicy p;
  if (text == "exhaustive") return p;
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      p.exhaustive = false;
      p.count = std::stoull(digits);
      return p;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "triples must be 'exhaustive' or 'sample:COUNT', got '" + text + "'");
}

std::string TriplePolicy::to_string() const {
  return exhaustive ? "exhaustive" : "sample:" + std::to_string(count);
}

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[time] " << what_ << ": " << s << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Triple> make_triples(const RunConfig& config, std::size_t irreps) {
  if (config.triples.exhaustive) {
    const std::uint64_t cube = static_cast<std::uint64_t>(irreps) * irreps * irreps;
    if (cube > config.triples.exhaustive_cap) {
      throw Error(ErrorCode::InvalidArgument, std::to_string(cube) + " triples exceed the exhaustive cap of " +
                                                  std::to_string(config.triples.exhaustive_cap) +
                                                  "; use --triples sample:COUNT");
    }
    return all_triples(irreps);
  }
  return sampled_triples(irreps, config.triples.count, config.seed);
}

}  // namespace

Report run_suite(const RunConfig& config) {
  for (const auto& s : config.suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s + "'");
  }
  if (config.format != "json" && config.format != "csv")
    throw Error(ErrorCode::InvalidArgument, "format must be json or csv");
  if (config.command != "compute" && config.command != "verify")
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");

  Report report;
  report.config = config;
  const auto selected = [&](const std::string& name) {
    return std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end();
  };

  auto field = FieldTower::build(config.params.p, config.params.e, config.params.n);
  std::unique_ptr<UnitGroup> group;
  {
    Stopwatch w("group");
    group = UnitGroup::build(field, config.params.m, config.max_group_order);
  }
  CacheResult cached;
  {
    Stopwatch w("character table");
    cached = cache_get_or_build(*group, config.seed, resolve_cache_dir(config.cache_dir));
  }
  report.cache = cached.status;
  report.cache_message = cached.message;
  if (!cached.message.empty()) std::cerr << "warning: " << cached.message << "\n";

  report.group_order = group->order();
  report.exponent = group->exponent();
  report.ell = cached.table.ell;
  report.classes = group->classes().count();
  const GroupModel model(std::move(group), std::move(cached.table), config.seed);

  const bool want_records = config.command == "compute" || !config.suites.empty();
  if (!want_records) {
    // group summary only
    for (std::size_t i = 0; i < model.irrep_count(); ++i) {
      IrrepRecord r;
      r.index = i;
      r.label = model.table().labels[i];
      r.degree = model.table().degrees[i];
      report.irreps.push_back(r);
    }
    return report;
  }

  std::optional<Analysis> analysis;
  {
    Stopwatch w("invariants");
    analysis.emplace(analyze(model, config.threads));
  }
  const Analysis& a = *analysis;
  report.irreps = a.irreps;
  report.pairs = a.pairs.records();
  for (const auto& rec : report.pairs) report.mu.push_back(mu_inverse_fn(rec, model.q()));

  std::vector<Triple> triples;
  if (selected("cliff") || selected("ultrametric")) triples = make_triples(config, a.irreps.size());

  for (const auto& name : all_suites()) {
    if (!selected(name)) continue;
    Stopwatch w("suite " + name);
    if (name == "cliff") {
      report.suites.push_back(check_cliff(a, triples));
    } else if (name == "invariants") {
      SuiteOutcome s("invariants");
      s.merge(check_table(model.table()), "table/");
      s.merge(check_steinberg(a), "steinberg/");
      s.merge(check_r_integrality(a), "r-integrality/");
      s.merge(check_invariant_properties(a), "properties/");
      s.merge(check_level_consistency(a, config.seed), "level-consistency/");
      report.suites.push_back(std::move(s));
    } else if (name == "conductor-integrality") {
      report.suites.push_back(check_conductor_integrality(a));
    } else if (name == "ultrametric") {
      auto s = check_ultrametric_suite(a, triples);
      s.notes["policy"] = config.triples.to_string();
      report.suites.push_back(std::move(s));
    } else if (name == "plancherel") {
      report.suites.push_back(check_plancherel(a));
    } else if (name == "oracle") {
      OracleConfig oc;
      oc.samples = config.oracle_samples;
      oc.seed = config.seed;
      oc.tolerance = config.tolerance;
      oc.series.shells = config.shells;
      oc.series.close_tails = config.close_tails;
      report.suites.push_back(check_oracle(a, oc));
    } else if (name == "norms") {
      report.suites.push_back(check_norms(a));
    }
  }
  return report;
}

json rational_json(const BigRational& x) {
  return {{"num", numerator_string(x)}, {"den", denominator_string(x)}};
}

json laurent_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [k, c] : p.terms()) out[std::to_string(k)] = rational_json(c);
  return out;
}

json report_json(const Report& r) {
  const auto& c = r.config;
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["config"] = {{"command", c.command},
                   {"p", c.params.p},
                   {"e", c.params.e},
                   {"n", c.params.n},
                   {"m", c.params.m},
                   {"suites", c.suites},
                   {"triples", c.triples.to_string()},
                   {"seed", c.seed},
                   {"format", c.format},
                   {"tolerance", c.tolerance},
                   {"shells", c.shells},
                   {"close_tails", c.close_tails},
                   {"oracle_samples", c.oracle_samples},
                   {"max_group_order", c.max_group_order}};

  std::map<std::string, std::size_t> profile;
  for (const auto& i : r.irreps) ++profile[std::to_string(i.degree)];
  doc["group"] = {{"q", c.params.q()},
                  {"order", r.group_order},
                  {"exponent", r.exponent},
                  {"ell", r.ell},
                  {"classes", r.classes},
                  {"irreps", r.irreps.size()},
                  {"degree_profile", profile}};

  doc["irreps"] = json::array();
  doc["pairs"] = json::array();
  doc["suites"] = json::array();
  if (!r.pairs.empty()) {
    for (const auto& i : r.irreps) {
      doc["irreps"].push_back({{"label", i.label},
                               {"degree", i.degree},
                               {"t", i.t},
                               {"r", i.r},
                               {"level", i.level},
                               {"inv", rational_json(i.inv)},
                               {"f", i.f},
                               {"f_tilde", i.f_tilde}});
    }
    for (std::size_t k = 0; k < r.pairs.size(); ++k) {
      const auto& p = r.pairs[k];
      json rec = {{"label1", p.label1},
                  {"label2", p.label2},
                  {"d1", p.d1},
                  {"d2", p.d2},
                  {"dist", p.dist},
                  {"hom_dims", p.hom_dims},
                  {"inv", rational_json(p.inv)},
                  {"t_pair", p.t_pair},
                  {"f", p.f},
                  {"f_tilde", p.f_tilde},
                  {"dist_zero", p.dist_zero},
                  {"integrality_verified", p.integrality_verified}};
      if (k < r.mu.size()) {
        rec["mu_inverse"] = {{"numerator", laurent_json(r.mu[k].fn.numerator())},
                             {"denominator", laurent_json(r.mu[k].fn.denominator())},
                             {"equal_case", r.mu[k].equal_case},
                             {"reduced_to_equal_pair", r.mu[k].reduced}};
      }
      doc["pairs"].push_back(std::move(rec));
    }
  } else {
    for (const auto& i : r.irreps) doc["irreps"].push_back({{"label", i.label}, {"degree", i.degree}});
  }
  for (const auto& s : r.suites) {
    json parts = json::object();
    for (const auto& [k, v] : s.parts) parts[k] = {{"checks", v.checks}, {"violations", v.violations}};
    doc["suites"].push_back({{"name", s.name},
                             {"passed", s.passed()},
                             {"checks", s.checks},
                             {"violations", s.violations},
                             {"parts", parts},
                             {"witnesses", s.witnesses},
                             {"notes", s.notes}});
  }
  doc["status"] = r.passed() ? "pass" : "violations";
  return doc;
}

std::string report_csv(const Report& r) {
  std::ostringstream out;
  out << "label1,label2,d1,d2,dist,inv_num,inv_den,t_pair,r1,f,f_tilde\n";
  for (const auto& p : r.pairs) {
    out << p.label1 << ',' << p.label2 << ',' << p.d1 << ',' << p.d2 << ',' << p.dist << ','
        << numerator_string(p.inv) << ',' << denominator_string(p.inv) << ',' << p.t_pair << ',' << p.r1 << ',' << p.f << ','
        << p.f_tilde << '\n';
  }
  return out.str();
}

std::string emit_report(const Report& report) {
  const std::string text =
      report.config.format == "csv" ? report_csv(report) : report_json(report).dump(2) + "\n";
  if (!report.config.out.empty()) {
    std::ofstream f(report.config.out, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::IO, "cannot open " + report.config.out);
    f << text;
    if (!f) throw Error(ErrorCode::IO, "write failed for " + report.config.out);
  }
  return text;
}

}  // namespace divinv
