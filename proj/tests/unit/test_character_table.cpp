#include "doctest.h"

#include <algorithm>

#include "divinv/character_table.hpp"
#include "divinv/errors.hpp"

using namespace divinv;

namespace {
std::unique_ptr<UnitGroup> make(std::uint32_t p, std::uint32_t n, std::size_t m) {
  return UnitGroup::build(FieldTower::build(p, 1, n), m);
}

std::int64_t lift(const CharacterTable& t, std::uint64_t v) { return ModArith(t.ell).lift_signed(v); }
}  // namespace

TEST_CASE("Sym(3) model reproduces the classical table") {
  const auto g = make(2, 2, 1);
  const auto t = character_table(*g, 1);
  CHECK(t.ell == 73);
  REQUIRE(t.irrep_count() == 3);
  CHECK(t.degrees == std::vector<std::uint64_t>{1, 1, 2});

  // classes: {1}, the two elements of order 3 (shell 0), the three involutions (shell 1)
  REQUIRE(t.class_sizes == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(t.class_shells == std::vector<std::uint32_t>{0, 0, 1});
  const std::vector<std::vector<std::int64_t>> classical{{1, 1, 1}, {1, 1, -1}, {2, -1, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 3; ++c) CHECK(lift(t, t.values[i][c]) == classical[i][c]);
}

TEST_CASE("tables are complete and orthogonal on the default matrix") {
  for (auto [p, n, m] : {std::tuple{2u, 2u, 1u}, {2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u},
                         {2u, 2u, 3u}, {3u, 2u, 1u}, {2u, 3u, 1u}}) {
    const auto g = make(p, n, m);
    const auto t = character_table(*g, 17);
    CAPTURE(g->order());
    CHECK(t.irrep_count() == g->classes().count());
    CHECK(sum_of_squared_degrees(t) == g->order());
    CHECK(first_orthogonality_failures(t) == 0);
    CHECK(column_orthogonality_failures(t) == 0);
    CHECK(twist_action_is_bijective(t));
    CHECK(t.ell % t.exponent == 1);
    CHECK(t.ell > 2 * g->order() * g->order());
    for (auto d : t.degrees) CHECK(g->order() % d == 0);
    CHECK(std::all_of(t.values[0].begin(), t.values[0].end(), [](auto v) { return v == 1; }));
    // the result does not depend on the splitting seed
    const auto again = character_table(*g, 99991);
    CHECK(again.values == t.values);
    CHECK(again.labels == t.labels);
  }
}

TEST_CASE("subgroup tables") {
  const auto g = make(2, 2, 2);
  const auto t = character_table(*g, 1);
  const auto u1 = subgroup_character_table(*g, 1, t.ell, 1);
  CHECK(u1.irrep_count() == 4);
  CHECK(u1.degrees == std::vector<std::uint64_t>{1, 1, 1, 1});
  const auto u2 = subgroup_character_table(*g, 2, t.ell, 1);
  CHECK(u2.irrep_count() == 1);

  const auto s3 = make(2, 2, 1);
  const auto ts = character_table(*s3, 1);
  const auto u0 = subgroup_character_table(*s3, 0, ts.ell, 1);
  CHECK(u0.degrees == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("inner products, twists, restrictions in the Sym(3) model") {
  const auto g = make(2, 2, 1);
  const auto t = character_table(*g, 1);
  const auto& cd = g->classes();
  const auto whole = whole_group_histogram(cd);
  const auto u0 = class_histogram(cd, g->congruence_subgroup(0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(inner_product_over(t, i, i, whole) == 1);
  CHECK(inner_product_over(t, 2, 2, u0) == 2);
  CHECK(inner_product_over(t, 0, 0, u0) == 1);
  CHECK(inner_product_over(t, 0, 2, u0) == 0);

  CHECK(twist_character(t, t.values[0], 0) == t.values[0]);
  CHECK(twist_character(t, t.values[0], 1) == t.values[1]);  // sign
  CHECK(twist_character(t, t.values[2], 1) == t.values[2]);

  const auto sub = subgroup_character_table(*g, 0, t.ell, 1);
  const auto parts = decompose_restriction(t, t.values[2], cd, sub, g->congruence_subgroup(0));
  REQUIRE(parts.size() == 2);
  for (const auto& c : parts) {
    CHECK(c.multiplicity == 1);
    CHECK(c.irrep != 0);  // both nontrivial
  }
  const auto triv = decompose_restriction(t, t.values[0], cd, sub, g->congruence_subgroup(0));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].irrep == 0);
  CHECK(triv[0].multiplicity == 1);

  // at k = m the restriction is d copies of the trivial character
  const auto top = subgroup_character_table(*g, 1, t.ell, 1);
  const auto at_m = decompose_restriction(t, t.values[2], cd, top, g->congruence_subgroup(1));
  REQUIRE(at_m.size() == 1);
  CHECK(at_m[0].multiplicity == 2);
}

TEST_CASE("histograms reject foreign subgroups") {
  const auto a = make(2, 2, 1);
  const auto b = make(2, 2, 1);
  try {
    (void)class_histogram(a->classes(), b->congruence_subgroup(0));
    FAIL("expected NotASubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubgroup);
  }
}
