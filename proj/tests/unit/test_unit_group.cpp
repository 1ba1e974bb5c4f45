#include "doctest.h"

#include <map>
#include <random>

#include "divinv/errors.hpp"
#include "divinv/unit_group.hpp"

using namespace divinv;

namespace {
std::unique_ptr<UnitGroup> make(std::uint32_t p, std::uint32_t e, std::uint32_t n, std::size_t m) {
  return UnitGroup::build(FieldTower::build(p, e, n), m);
}
}  // namespace

TEST_CASE("G_1 for q=2, n=2 is Sym(3)") {
  const auto g = make(2, 1, 2, 1);
  CHECK(g->order() == 6);
  std::map<std::uint64_t, int> profile;
  for (Index x = 0; x < g->order(); ++x) ++profile[g->element_order(x)];
  CHECK(profile == std::map<std::uint64_t, int>{{1, 1}, {2, 3}, {3, 2}});
  const auto& cd = g->classes();
  REQUIRE(cd.count() == 3);
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c < cd.count(); ++c) sizes.push_back(cd.size(c));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(cd.size(0) == 1);
  CHECK(cd.representative(0) == g->identity());
}

TEST_CASE("group orders") {
  CHECK(make(2, 1, 2, 2)->order() == 24);
  CHECK(make(3, 1, 2, 1)->order() == 16);
  CHECK(make(3, 1, 2, 2)->order() == 144);
  CHECK(make(2, 1, 3, 2)->order() == 168);
  CHECK(make(2, 1, 2, 3)->order() == 96);
  try {
    UnitGroup::build(FieldTower::build(2, 1, 2), 3, 50);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBound);
  }
}

TEST_CASE("congruence filtration") {
  const auto g = make(2, 1, 2, 2);
  CHECK(g->congruence_subgroup(0).order() == 12);
  CHECK(g->congruence_subgroup(1).order() == 4);
  CHECK(g->congruence_subgroup(2).order() == 1);
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto& u = g->congruence_subgroup(k);
    CHECK(u.is_closed());
    CHECK(u.is_normal());
    for (Index x : u.elements()) {
      const auto [series, j] = g->decode(x);
      CHECK(j == 0);
      if (k >= 1) {
        const auto diff = series - TwistedSeries::one(g->field(), g->level());
        CHECK((diff.is_zero() || diff.valuation() >= k));
      }
    }
  }
  // the index chain and volumes
  const auto g3 = make(2, 1, 2, 3);
  const std::uint64_t qn = 4;
  CHECK(g3->congruence_subgroup(0).order() / g3->congruence_subgroup(1).order() == qn - 1);
  CHECK(g3->congruence_subgroup(1).order() / g3->congruence_subgroup(2).order() == qn);
  CHECK(g3->congruence_subgroup(2).order() / g3->congruence_subgroup(3).order() == qn);
  CHECK(g3->volume(0) == 1);
  CHECK(g3->volume(1) == rational(1, 3));
  CHECK(g3->volume(2) == rational(1, 12));
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(g3->volume(k) ==
          BigRational(g3->congruence_subgroup(k).order(), g3->congruence_subgroup(0).order()));
  }
}

TEST_CASE("group axioms exhaustively on small orders, sampled above") {
  for (auto [p, n, m] : {std::tuple{2u, 2u, 1u}, {2u, 2u, 2u}, {3u, 2u, 1u}, {2u, 3u, 1u},
                         {2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 3u, 2u}}) {
    const auto g = make(p, 1, n, m);
    const std::size_t order = g->order();
    CHECK(g->multiply(0, 0) == 0);
    for (Index x = 0; x < order; ++x) {
      CHECK(g->multiply(x, g->inverse(x)) == g->identity());
      CHECK(g->multiply(g->inverse(x), x) == g->identity());
      CHECK(g->multiply(x, g->identity()) == x);
    }
    if (order * order * order <= 200'000) {
      for (Index a = 0; a < order; ++a)
        for (Index b = 0; b < order; ++b)
          for (Index c = 0; c < order; ++c)
            CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
    } else {
      std::mt19937 rng(11);
      std::uniform_int_distribution<Index> pick(0, order - 1);
      for (int t = 0; t < 20000; ++t) {
        const Index a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
      }
    }
    // the image of Pi has order n and acts on U_0 by coefficientwise Frobenius
    const Index pi = g->uniformizer();
    CHECK(g->element_order(pi) == n);
    CHECK(g->exponent() % n == 0);
    for (Index u : g->congruence_subgroup(0).elements()) {
      const auto [series, j] = g->decode(g->conjugate(pi, u));
      CHECK(j == 0);
      CHECK(series == g->decode(u).first.frobenius(1));
    }
  }
}

TEST_CASE("encode/decode and projection") {
  const auto g = make(3, 1, 2, 2);
  const auto lower = make(3, 1, 2, 1);
  for (Index x = 0; x < g->order(); ++x) {
    const auto [u, j] = g->decode(x);
    CHECK(g->encode(u, j) == x);
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<Index> pick(0, g->order() - 1);
  for (int t = 0; t < 2000; ++t) {
    const Index a = pick(rng), b = pick(rng);
    CHECK(g->project(g->multiply(a, b), *lower) ==
          lower->multiply(g->project(a, *lower), g->project(b, *lower)));
  }
}

TEST_CASE("classes partition the group") {
  const auto g = make(3, 1, 2, 2);
  const auto& cd = g->classes();
  std::size_t total = 0;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    total += cd.size(c);
    CHECK(g->order() % cd.size(c) == 0);
    for (Index x : cd.members[c]) CHECK(cd.class_of[x] == c);
    // shells are constant on classes
    for (Index x : cd.members[c]) CHECK(g->shell(x) == g->shell(cd.representative(c)));
  }
  CHECK(total == g->order());
  CHECK(cd.size(0) == 1);
}
