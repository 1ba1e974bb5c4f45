#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divinv/invariants.hpp"
#include "divinv/rational.hpp"

namespace divinv {

/// Finite sum of rational multiples of Y^k, k in Z.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<std::int64_t, BigRational> terms);
  static LaurentPoly constant(const BigRational& c);
  static LaurentPoly monomial(const BigRational& c, std::int64_t k);

  const std::map<std::int64_t, BigRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;
  BigRational coefficient(std::int64_t k) const;
  BigRational leading() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const BigRational& c) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Y^k times this.
  LaurentPoly shifted(std::int64_t k) const;
  /// Y -> 1/Y.
  LaurentPoly inverted() const;
  std::complex<double> evaluate(std::complex<double> y) const;
  BigRational evaluate(const BigRational& y) const;

 private:
  void add_term(std::int64_t k, const BigRational& c);
  std::map<std::int64_t, BigRational> terms_;
};

/// Quotient of Laurent polynomials, kept in lowest terms: both parts are
/// polynomials without a common factor and the denominator is monic with a
/// nonzero constant term.
class LaurentRationalFn {
 public:
  LaurentRationalFn() : num_(), den_(LaurentPoly::constant(1)) {}
  LaurentRationalFn(LaurentPoly num, LaurentPoly den);
  static LaurentRationalFn constant(const BigRational& c);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_constant() const;

  LaurentRationalFn operator+(const LaurentRationalFn& o) const;
  LaurentRationalFn operator*(const LaurentRationalFn& o) const;
  LaurentRationalFn operator*(const BigRational& c) const;
  LaurentRationalFn reciprocal() const;
  LaurentRationalFn inverted() const;
  /// Cross-multiplication test.
  bool equals(const LaurentRationalFn& o) const;
  bool operator==(const LaurentRationalFn& o) const { return equals(o); }

  std::complex<double> evaluate(std::complex<double> y) const;
  std::string to_string() const;

 private:
  LaurentPoly num_, den_;
};

/// Multiplicity of Y = y0 as a root of a nonzero Laurent polynomial.
std::size_t root_multiplicity(const LaurentPoly& p, const BigRational& y0);

/// mu^{-1} as a function of Y = q^{-s}. Pairs at distance 0 are reduced to
/// the equal case (pi_2 replaced by pi_1).
struct MuInverse {
  LaurentRationalFn fn;
  bool equal_case = false;
  bool reduced = false;  // pi_2 was replaced by pi_1
};

MuInverse mu_inverse_fn(const InvariantRecord& record, std::uint64_t q);

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::string witness;
};

/// mu^{-1} d^2 against t^2/(1-c)^2 (1-cY^t)(1-cY^{-t})/((1-Y^t)(1-Y^{-t})),
/// c = q^{-rt}; mu against v_n^2 q^f (1-Y^t)(1-Y^{-t})/((1-cY^t)(1-cY^{-t}));
/// d^2 = v_n^2 q^f t^2/(1-c)^2; and for dist > 0, mu = v_n^2 q^f.
std::vector<IdentityCheck> plancherel_factorization_check(const InvariantRecord& record,
                                                          std::uint64_t q, std::uint32_t n);

/// mu^{-1}(Y) = mu^{-1}(1/Y).
bool is_symmetric(const LaurentRationalFn& fn);
/// Order of the pole of the lowest-terms function at Y = 1.
std::size_t pole_order_at_one(const LaurentRationalFn& fn);

struct OracleOptions {
  std::int64_t shells = 60;
  /// Add the closed geometric tails beyond +-N.
  bool close_tails = true;
};

/// Shell sums S_k = (1/|U_0|) sum_{v(g) = k} chi_1(g) chi_2(g^{-1}), k = 0..n-1,
/// lifted to signed integers.
std::vector<std::int64_t> shell_sums(const GroupModel& model, std::size_t a, std::size_t b);

/// sum over m' = -N..N of A(m', s), divided by d_1 d_2. Throws
/// ConvergenceRegion for Re s >= 0.
std::complex<double> series_oracle(const GroupModel& model, const InvariantRecord& record,
                                   std::complex<double> s, const OracleOptions& options = {});

/// The closed form at s, through Y = q^{-s}.
std::complex<double> evaluate_at_s(const LaurentRationalFn& fn, std::uint64_t q, std::complex<double> s);

}  // namespace divinv
