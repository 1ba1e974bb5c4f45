#include "doctest.h"

#include "divinv/checks.hpp"

using namespace divinv;

namespace {
void require_clean(const SuiteOutcome& s) {
  CAPTURE(s.name);
  for (const auto& w : s.witnesses) CAPTURE(w);
  CHECK(s.checks > 0);
  CHECK(s.violations == 0);
}
}  // namespace

TEST_CASE("every suite is clean on small groups") {
  for (GroupParams p : {GroupParams{2, 1, 2, 1}, GroupParams{2, 1, 2, 2}, GroupParams{3, 1, 2, 1}}) {
    const auto model = GroupModel::build(p, 3);
    const auto a = analyze(model, 2);
    const auto triples = all_triples(a.irreps.size());
    require_clean(check_table(model.table()));
    require_clean(check_steinberg(a));
    require_clean(check_r_integrality(a));
    require_clean(check_conductor_integrality(a));
    require_clean(check_ultrametric_suite(a, triples));
    require_clean(check_cliff(a, triples));
    require_clean(check_invariant_properties(a));
    require_clean(check_norms(a));
    require_clean(check_plancherel(a));
    require_clean(check_oracle(a, {}));
    if (p.m > 1) require_clean(check_level_consistency(a, 3));
  }
}

TEST_CASE("Clifford ratio uses the reciprocal of the constituent count") {
  // rho on U_0 in the Sym(3) model: two distinct linear constituents
  const auto model = GroupModel::build({2, 1, 2, 1}, 1);
  const auto h = hom_dim(model, 2, 2, 0);
  CHECK(h == 2);
  const std::uint64_t distinct = 2, sigma = 1, d = 2;
  CHECK(h * distinct * sigma * sigma == d * d);  // 1/(k d_sigma^2)
  CHECK(h * sigma * sigma != distinct * d * d);  // k/d_sigma^2 does not hold
}

TEST_CASE("outcomes count and cap witnesses") {
  SuiteOutcome s("x");
  for (int i = 0; i < 30; ++i) s.check("p", i % 2 == 0, [&] { return std::to_string(i); });
  CHECK(s.checks == 30);
  CHECK(s.violations == 15);
  CHECK(s.parts["p"].violations == 15);
  CHECK(s.witnesses.size() == 15);
  SuiteOutcome t("y");
  t.merge(s);
  t.merge(s);
  CHECK(t.witnesses.size() == SuiteOutcome::kMaxWitnesses);
  CHECK_FALSE(t.passed());
}

TEST_CASE("oracle samples are seeded and in range") {
  OracleConfig c;
  const auto a = oracle_samples(c);
  CHECK(a.size() == 5);
  CHECK(a == oracle_samples(c));
  for (const auto& s : a) {
    CHECK(s.real() >= -1.5);
    CHECK(s.real() <= -0.3);
  }
}
