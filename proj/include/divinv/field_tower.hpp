#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace divinv {

/// An element of F_{q^n}, stored as the base-p integer encoding of its
/// coefficient vector over F_p (coefficient of x^i is digit i).
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// F_p inside F_q inside F_{q^n}, with q = p^e, realized as a single
/// extension of degree e*n over F_p. The modulus is the least monic
/// irreducible polynomial of that degree when the lower coefficients are
/// read as a base-p integer. Immutable; copies share the lookup tables.
class FieldTower {
 public:
  static constexpr std::uint64_t kDefaultSizeBound = std::uint64_t{1} << 20;

  /// Throws NotPrime for composite p, SizeBound when p^{e n} exceeds size_bound.
  static FieldTower build(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                          std::uint64_t size_bound = kDefaultSizeBound);

  std::uint32_t p() const noexcept { return tables_->p; }
  std::uint32_t e() const noexcept { return tables_->e; }
  std::uint32_t n() const noexcept { return tables_->n; }
  std::uint32_t q() const noexcept { return tables_->q; }
  /// Extension degree e*n over F_p.
  std::uint32_t degree() const noexcept { return tables_->degree; }
  /// Number of elements q^n.
  std::uint32_t size() const noexcept { return tables_->size; }
  /// Modulus coefficients, constant term first, monic (length degree+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return tables_->modulus; }
  FieldElement generator() const noexcept { return {tables_->generator}; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// i-th element of the fixed enumeration order (i < size()).
  FieldElement element(std::uint32_t i) const noexcept { return {i}; }
  FieldElement scalar(std::uint32_t c) const noexcept { return {c % p()}; }
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.code == 0 || b.code == 0) return {0};
    return {tables_->exp[tables_->log[a.code] + tables_->log[b.code]]};
  }
  /// Throws DivisionByZero for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t k) const;
  /// a^{q^k}; k may be negative and is read modulo n.
  FieldElement frobenius(FieldElement a, std::int64_t k) const noexcept {
    if (a.code == 0) return a;
    const auto n_ = static_cast<std::int64_t>(n());
    const auto kk = static_cast<std::size_t>(((k % n_) + n_) % n_);
    const auto idx = static_cast<std::uint64_t>(tables_->log[a.code]) * tables_->qpow_mod[kk] %
                     (tables_->size - 1);
    return {tables_->exp[idx]};
  }

  std::uint64_t multiplicative_order(FieldElement a) const;

 private:
  struct Tables {
    std::uint32_t p = 0, e = 0, n = 0, q = 0, degree = 0, size = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> exp;   // length 2*(size-1)
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::uint64_t> qpow_mod;  // q^k mod (size-1), k = 0..n-1
  };

  explicit FieldTower(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}

  std::shared_ptr<const Tables> tables_;
};

}  // namespace divinv
