#include "doctest.h"

#include <random>

#include "divinv/linalg_mod.hpp"

using namespace divinv;

TEST_CASE("primes and primitive roots") {
  CHECK(is_prime(73));
  CHECK(!is_prime(1));
  CHECK(!is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(1000000007ull));
  CHECK(find_prime_congruent_one(72, 6) == 73);
  CHECK(find_prime_congruent_one(73, 6) == 79);
  const auto g = primitive_root(73);
  const ModArith f(73);
  for (auto d : prime_factors(72)) CHECK(f.pow(g, 72 / d) != 1);
}

TEST_CASE("characteristic polynomial agrees with det(xI - A) at sample points") {
  const ModArith f(1000003);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, 1000002);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    ModMatrix a(n, ModVector(n));
    for (auto& row : a)
      for (auto& x : row) x = (pick(rng) % 4 == 0) ? 0 : pick(rng);
    const auto cp = characteristic_polynomial(f, a);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp.back() == 1);
    for (int t = 0; t < 5; ++t) {
      const std::uint64_t x = pick(rng);
      ModMatrix m = a;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = f.neg(m[i][j]);
        m[i][i] = f.add(m[i][i], x);
      }
      CHECK(poly_eval(f, cp, x) == determinant(f, m));
    }
  }
}

TEST_CASE("distinct roots") {
  const ModArith f(10007);
  std::mt19937_64 rng(1);
  // (x-3)^2 (x-5) (x-0) (x^2 + 1) ; -1 is a non-residue mod 10007 (10007 = 3 mod 4)
  ModPoly p{1};
  auto mul_linear = [&](std::uint64_t r) {
    ModPoly out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i + 1] = f.add(out[i + 1], p[i]);
      out[i] = f.sub(out[i], f.mul(r, p[i]));
    }
    p = out;
  };
  mul_linear(3);
  mul_linear(3);
  mul_linear(5);
  mul_linear(0);
  ModPoly q(p.size() + 2, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = f.add(q[i], p[i]);
    q[i + 2] = f.add(q[i + 2], p[i]);
  }
  CHECK(distinct_roots(f, q, rng) == std::vector<std::uint64_t>{0, 3, 5});
}

TEST_CASE("nullspace and restriction") {
  const ModArith f(101);
  const ModMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ns = nullspace(f, a);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(row[i], ns[0][i]));
    CHECK(acc == 0);
  }
  CHECK(rank(f, a) == 2);
  // diag(2,3,3) restricted to span(e2, e3) is 3 I
  const ModMatrix d{{2, 0, 0}, {0, 3, 0}, {0, 0, 3}};
  const auto b = restrict_to_subspace(f, d, {{0, 1, 1}, {0, 1, 0}});
  CHECK(b == ModMatrix{{3, 0}, {0, 3}});
}
