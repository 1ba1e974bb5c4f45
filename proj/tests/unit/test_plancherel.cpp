#include "doctest.h"

#include "divinv/errors.hpp"
#include "divinv/plancherel.hpp"

using namespace divinv;

namespace {
LaurentPoly y(std::int64_t k, std::int64_t c = 1) { return LaurentPoly::monomial(rational(c), k); }
}  // namespace

TEST_CASE("Laurent rational functions reduce to lowest terms") {
  // (Y^2 - 1)/(Y - 1) = Y + 1
  const LaurentRationalFn f(y(2) - y(0), y(1) - y(0));
  CHECK(f.denominator() == y(0));
  CHECK(f.numerator() == y(1) + y(0));
  // Y^{-1}/(2Y^{-3}) = Y^2/2
  const LaurentRationalFn g(y(-1), y(-3, 2));
  CHECK(g.numerator() == LaurentPoly::monomial(rational(1, 2), 2));
  CHECK(g.denominator() == y(0));
  CHECK(f == LaurentRationalFn(y(1) + y(0), y(0)));
  CHECK_FALSE(f == g);
  CHECK(root_multiplicity((y(1) - y(0)) * (y(1) - y(0)) * (y(1) + y(0)), rational(1)) == 2);
  CHECK_THROWS_AS(LaurentRationalFn(y(0), LaurentPoly()), Error);
}

TEST_CASE("Sym(3) Plancherel functions") {
  const auto model = GroupModel::build({2, 1, 2, 1}, 1);
  const auto irreps = compute_irrep_records(model);
  const auto triv = compute_pair_record(model, irreps, 0, 0);
  const auto rho = compute_pair_record(model, irreps, 2, 2);
  const auto mixed = compute_pair_record(model, irreps, 0, 2);

  const auto m_mixed = mu_inverse_fn(mixed, 2);
  CHECK_FALSE(m_mixed.equal_case);
  CHECK(m_mixed.fn == LaurentRationalFn::constant(rational(4, 9)));

  // 4/9 + 1/((1 - Y^{-1})(1 - Y))
  const auto m_triv = mu_inverse_fn(triv, 2);
  const LaurentRationalFn expected =
      LaurentRationalFn::constant(rational(4, 9)) +
      LaurentRationalFn(y(0), (y(0) - y(-1)) * (y(0) - y(1)));
  CHECK(m_triv.fn == expected);
  CHECK(pole_order_at_one(m_triv.fn) == 2);
  CHECK(is_symmetric(m_triv.fn));

  for (const auto* rec : {&triv, &rho, &mixed}) {
    for (const auto& c : plancherel_factorization_check(*rec, 2, 2)) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.holds);
    }
  }

  const auto sign_pair = compute_pair_record(model, irreps, 0, 1);
  CHECK(mu_inverse_fn(sign_pair, 2).reduced);
  CHECK(mu_inverse_fn(sign_pair, 2).fn == m_triv.fn);
}

TEST_CASE("series oracle against the closed form") {
  const auto model = GroupModel::build({2, 1, 2, 1}, 1);
  const auto irreps = compute_irrep_records(model);
  const auto triv = compute_pair_record(model, irreps, 0, 0);
  const auto rho = compute_pair_record(model, irreps, 2, 2);
  const auto mixed = compute_pair_record(model, irreps, 0, 2);

  CHECK(shell_sums(model, 0, 0) == std::vector<std::int64_t>{1, 1});
  CHECK(shell_sums(model, 2, 2) == std::vector<std::int64_t>{2, 0});

  const OracleOptions raw{60, false};
  {
    const std::complex<double> s(-1, 0);
    const auto closed = evaluate_at_s(mu_inverse_fn(triv, 2).fn, 2, s);
    CHECK(std::abs(series_oracle(model, triv, s, raw) - closed) / std::abs(closed) < 1e-9);
  }
  {
    const std::complex<double> s(-0.7, 0.3);
    const auto closed = evaluate_at_s(mu_inverse_fn(rho, 2).fn, 2, s);
    CHECK(std::abs(series_oracle(model, rho, s, {80, false}) - closed) / std::abs(closed) < 1e-9);
  }
  for (double re : {-1.5, -0.9, -0.3}) {
    const std::complex<double> s(re, 0.4);
    for (const auto* rec : {&triv, &rho, &mixed}) {
      const auto closed = evaluate_at_s(mu_inverse_fn(*rec, 2).fn, 2, s);
      CHECK(std::abs(series_oracle(model, *rec, s) - closed) / std::abs(closed) < 1e-9);
    }
  }
  try {
    (void)series_oracle(model, triv, {0.0, 1.0});
    FAIL("expected ConvergenceRegion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConvergenceRegion);
  }
}
