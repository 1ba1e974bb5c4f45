#include "doctest.h"

#include "divinv/errors.hpp"
#include "divinv/invariants.hpp"

using namespace divinv;

TEST_CASE("Sym(3) invariants") {
  const auto model = GroupModel::build({2, 1, 2, 1}, 1);
  REQUIRE(model.irrep_count() == 3);
  // rows: trivial, sign, rho
  CHECK(dist(model, 0, 1) == 0);
  CHECK(dist(model, 0, 2) == 1);
  CHECK(hom_dim(model, 0, 2, 0) == 0);
  CHECK(hom_dim(model, 0, 2, 1) == 2);

  CHECK(inv_pairing(model, 0, 0) == rational(4, 9));
  CHECK(inv_pairing(model, 2, 2) == rational(16, 9));
  CHECK(inv_pairing(model, 0, 2) == rational(8, 9));

  CHECK(twist_stabilizer(model, 2) == 2);
  CHECK(twist_stabilizer(model, 0) == 1);
  CHECK(twist_pair_count(model, 0, 1) == 1);
  CHECK(twist_pair_count(model, 0, 2) == 0);

  const auto irreps = compute_irrep_records(model);
  CHECK(irreps[0].r == 2);
  CHECK(irreps[1].r == 2);
  CHECK(irreps[2].r == 1);
  CHECK(irreps[0].f == 2);
  CHECK(irreps[0].f_tilde == 4);
  CHECK(irreps[2].f_tilde == 4);
  CHECK(irreps[2].f == 2);
  CHECK(irreps[0].level == 0);
  CHECK(irreps[2].level == 1);

  const auto pair = compute_pair_record(model, irreps, 2, 0);
  CHECK(pair.first == 0);
  CHECK(pair.second == 2);
  CHECK(pair.f_tilde == 4);
  CHECK(pair.f == 4);
  CHECK(pair.hom_dims == std::vector<std::uint64_t>{0, 2});

  const PairTable table(3, compute_pair_records(model, irreps, 2));
  CHECK(table.at(2, 0).inv == rational(8, 9));
  CHECK(table.at(1, 1).inv == rational(4, 9));
  CHECK(check_ultrametric(table, all_triples(3)).empty());
  // trivial, sign, rho: f~(1,3) = 4 = max(f~(1,2), f~(2,3))
  CHECK(table.at(0, 2).f_tilde == std::max(table.at(0, 1).f_tilde, table.at(1, 2).f_tilde));
}

TEST_CASE("closed forms") {
  CHECK(normalization_constant(2, 2) == rational(3, 8));
  CHECK(reducibility_inv(2, 1, 2) == rational(4, 9));
  CHECK(reducibility_inv(2, 2, 1) == rational(16, 9));
  CHECK(solve_r(2, 2, 1, rational(4, 9)) == 2);
  try {
    (void)solve_r(2, 2, 1, rational(1, 3));
    FAIL("expected NoIntegerSolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoIntegerSolution);
  }
  try {
    (void)conductor(2, 2, rational(1, 3), 1, 1, 1, 0);
    FAIL("expected NotAPowerOfQ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPowerOfQ);
  }
}

TEST_CASE("integrality and ultrametricity across the small matrix") {
  for (GroupParams p : {GroupParams{2, 1, 2, 2}, GroupParams{3, 1, 2, 1}, GroupParams{2, 1, 3, 1}}) {
    const auto model = GroupModel::build(p, 7);
    CAPTURE(model.group().order());
    const auto irreps = compute_irrep_records(model);
    for (const auto& r : irreps) CHECK((model.n() / r.t) % r.r == 0);
    const PairTable table(irreps.size(), compute_pair_records(model, irreps));
    for (const auto& rec : table.records()) {
      CHECK(rec.f >= 0);
      CHECK(rec.dist_zero == (rec.t_pair > 0));
    }
    CHECK(check_ultrametric(table, all_triples(irreps.size())).empty());
  }
}

TEST_CASE("parallel_for covers every index and propagates failures") {
  std::vector<int> hits(100, 0);
  parallel_for(100, 4, [&](std::size_t i) { hits[i]++; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw Error(ErrorCode::Internal, "x");
  }));
}
