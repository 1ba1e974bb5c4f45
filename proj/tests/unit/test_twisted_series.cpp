#include "doctest.h"

#include <random>

#include "divinv/errors.hpp"
#include "divinv/twisted_series.hpp"

using namespace divinv;

namespace {
TwistedSeries series(const FieldTower& f, std::initializer_list<std::uint32_t> codes) {
  std::vector<FieldElement> c;
  for (auto v : codes) c.push_back({v});
  return TwistedSeries(f, std::move(c));
}

/// All elements of R_m, by base-|F| digits.
std::vector<TwistedSeries> enumerate(const FieldTower& f, std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= f.size();
  std::vector<TwistedSeries> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    TwistedSeries s(f, m);
    std::size_t x = idx;
    for (std::size_t i = 0; i < m; ++i) {
      s.set(i, {static_cast<std::uint32_t>(x % f.size())});
      x /= f.size();
    }
    out.push_back(std::move(s));
  }
  return out;
}
}  // namespace

TEST_CASE("twisted multiplication in R_2 over F_4") {
  const auto f = FieldTower::build(2, 1, 2);
  const auto pi = TwistedSeries::uniformizer(f, 2);
  const auto x = TwistedSeries::constant(f, 2, {2});
  // Pi x = sigma(x) Pi = (x + 1) Pi
  CHECK(pi * x == series(f, {0, 3}));
  // (x + Pi)^2 = x^2 + x Pi + Pi x = (x+1) + (x + x + 1) Pi = (x+1) + Pi
  const auto y = x + pi;
  CHECK(y * y == series(f, {3, 1}));
  CHECK(y * TwistedSeries::one(f, 2) == y);
}

TEST_CASE("series inverse") {
  const auto f = FieldTower::build(2, 1, 2);
  for (std::uint32_t a = 0; a < 4; ++a) {
    const auto s = series(f, {1, a});
    CHECK(s.inverse() == s);  // char 2, Pi^2 = 0
  }
  CHECK(TwistedSeries::one(f, 3).inverse() == TwistedSeries::one(f, 3));
  const auto c = TwistedSeries::constant(f, 3, {2});
  CHECK(c.inverse() == TwistedSeries::constant(f, 3, f.inv({2})));
  try {
    (void)series(f, {0, 1}).inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }
}

TEST_CASE("valuation") {
  const auto f = FieldTower::build(3, 1, 2);
  CHECK(TwistedSeries::uniformizer(f, 3).valuation() == 1);
  CHECK(series(f, {4, 0, 1}).valuation() == 0);
  const auto pi = TwistedSeries::uniformizer(f, 3);
  const auto pi2 = pi * pi;
  CHECK(pi2.valuation() == 2);
  try {
    (void)(pi2 * pi).valuation();
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroElement);
  }
  CHECK_THROWS_AS(TwistedSeries::one(f, 2) * TwistedSeries::one(f, 3), Error);
}

TEST_CASE("unit count, associativity, and the twist rule on small orders") {
  struct Case {
    std::uint32_t p, e, n;
    std::size_t m;
  };
  for (auto cs : {Case{2, 1, 2, 2}, Case{3, 1, 2, 2}, Case{2, 1, 3, 2}, Case{2, 1, 2, 3}}) {
    const auto f = FieldTower::build(cs.p, cs.e, cs.n);
    const auto all = enumerate(f, cs.m);
    std::size_t units = 0;
    for (const auto& s : all)
      if (s.is_unit()) ++units;
    std::size_t expected = f.size() - 1;
    for (std::size_t i = 1; i < cs.m; ++i) expected *= f.size();
    CHECK(units == expected);

    // exhaustive triples for |R_m| <= 2^12 would be 2^36; sample instead
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 3000; ++t) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (a.is_unit()) CHECK(a * a.inverse() == TwistedSeries::one(f, cs.m));
      if (a.is_unit()) CHECK(a.inverse() * a == TwistedSeries::one(f, cs.m));
      if (!a.is_zero() && !b.is_zero() && a.valuation() + b.valuation() < cs.m) {
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
      }
      // Pi a = sigma(a) Pi coefficientwise
      const auto pi = TwistedSeries::uniformizer(f, cs.m);
      CHECK(pi * a == a.frobenius(1) * pi);
    }
  }
}

TEST_CASE("exhaustive associativity on R_2 over F_4") {
  const auto f = FieldTower::build(2, 1, 2);
  const auto all = enumerate(f, 2);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("central elements: F_q coefficients on powers of Pi^n") {
  const auto f = FieldTower::build(3, 1, 2);
  const std::size_t m = 3;
  // Pi^n with n = 2 and an F_q coefficient
  TwistedSeries z(f, m);
  z.set(0, f.one());
  z.set(2, f.scalar(2));
  const auto all = enumerate(f, m);
  for (std::size_t i = 0; i < all.size(); i += 3) CHECK(z * all[i] == all[i] * z);
}
