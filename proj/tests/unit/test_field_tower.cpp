#include "doctest.h"

#include <set>

#include "divinv/errors.hpp"
#include "divinv/field_tower.hpp"

using namespace divinv;

TEST_CASE("F_4 is defined by x^2 + x + 1") {
  const auto f = FieldTower::build(2, 1, 2);
  CHECK(f.size() == 4);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const FieldElement x{2}, x1{3};
  CHECK(f.mul(x, x1) == f.one());
  CHECK(f.inv(x) == x1);
  CHECK(f.add(x, f.zero()) == x);
  // q = 2: sigma(x) = x^2 = x + 1
  CHECK(f.frobenius(x, 1) == x1);
  CHECK(f.frobenius(x, 2) == x);
}

TEST_CASE("F_9 and F_8 basics") {
  const auto f9 = FieldTower::build(3, 1, 2);
  CHECK(f9.size() == 9);
  std::set<std::uint32_t> seen;
  for (std::uint32_t i = 0; i < f9.size(); ++i) seen.insert(f9.element(i).code);
  CHECK(seen.size() == 9);

  const auto f8 = FieldTower::build(2, 1, 3);
  CHECK(f8.multiplicative_order(f8.generator()) == 7);
  // least modulus in base-p order of the lower coefficients: x^3 + x + 1
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("field build errors") {
  CHECK_THROWS_AS(FieldTower::build(4, 1, 2), Error);
  try {
    FieldTower::build(6, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    FieldTower::build(2, 1, 30);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBound);
  }
  const auto f = FieldTower::build(2, 1, 2);
  try {
    (void)f.inv(f.zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("field axioms and Frobenius, exhaustively on small towers") {
  for (auto [p, e, n] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 1u, 3u}, {2u, 2u, 2u},
                         {5u, 1u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u}}) {
    CAPTURE(p);
    CAPTURE(e);
    CAPTURE(n);
    const auto f = FieldTower::build(p, e, n);
    const std::uint32_t size = f.size();
    REQUIRE(size <= (1u << 12));
    CHECK(f.multiplicative_order(f.generator()) == size - 1);

    std::size_t fixed = 0;
    for (std::uint32_t i = 0; i < size; ++i) {
      const auto a = f.element(i);
      CHECK(f.frobenius(a, n) == a);
      CHECK(f.pow(a, size) == a);
      if (f.frobenius(a, 1) == a) ++fixed;
      if (a.code != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.add(a, f.neg(a)) == f.zero());
      for (std::uint32_t j = 0; j < size; j += (size > 64 ? 7 : 1)) {
        const auto b = f.element(j);
        CHECK(f.frobenius(f.mul(a, b), 1) == f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    CHECK(fixed == f.q());
  }
}

TEST_CASE("distributivity on F_27 triples") {
  const auto f = FieldTower::build(3, 1, 3);
  for (std::uint32_t i = 0; i < f.size(); ++i)
    for (std::uint32_t j = 0; j < f.size(); j += 2)
      for (std::uint32_t k = 0; k < f.size(); k += 5) {
        const auto a = f.element(i), b = f.element(j), c = f.element(k);
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
}
