#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "divinv/field_tower.hpp"

namespace divinv {

// Raw kernels shared with the unit group. All spans have the same length m.

/// out = a * b in F_{q^n}[Pi]/(Pi^m) with Pi c = sigma(c) Pi, i.e.
/// out_k = sum_{i+j=k} a_i sigma^i(b_j). `out` must not alias a or b.
void twisted_mul(const FieldTower& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b, std::span<FieldElement> out);

/// out_i = sigma^k(a_i). May alias.
void twisted_frobenius(const FieldTower& field, std::span<const FieldElement> a, std::int64_t k,
                       std::span<FieldElement> out);

/// Inverse of a series with a_0 != 0 (residue inverse, then solve for the
/// higher coefficients one Pi-power at a time). Throws NotAUnit.
void twisted_inverse(const FieldTower& field, std::span<const FieldElement> a,
                     std::span<FieldElement> out);

/// Element of the truncated maximal order R_m = O_D / p^m.
class TwistedSeries {
 public:
  TwistedSeries(FieldTower field, std::size_t level);
  TwistedSeries(FieldTower field, std::vector<FieldElement> coeffs);

  static TwistedSeries one(const FieldTower& field, std::size_t level);
  /// The uniformizer Pi (zero when level == 1).
  static TwistedSeries uniformizer(const FieldTower& field, std::size_t level);
  static TwistedSeries constant(const FieldTower& field, std::size_t level, FieldElement c);

  std::size_t level() const noexcept { return coeffs_.size(); }
  const FieldTower& field() const noexcept { return field_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  FieldElement operator[](std::size_t i) const { return coeffs_.at(i); }
  void set(std::size_t i, FieldElement c) { coeffs_.at(i) = c; }

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return coeffs_.front().code != 0; }
  /// Least index with a nonzero coefficient. Throws ZeroElement.
  std::size_t valuation() const;
  TwistedSeries inverse() const;
  /// Coefficientwise sigma^k, which is conjugation by Pi^k.
  TwistedSeries frobenius(std::int64_t k) const;

  friend TwistedSeries operator*(const TwistedSeries& a, const TwistedSeries& b);
  friend TwistedSeries operator+(const TwistedSeries& a, const TwistedSeries& b);
  friend TwistedSeries operator-(const TwistedSeries& a, const TwistedSeries& b);
  friend bool operator==(const TwistedSeries& a, const TwistedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  FieldTower field_;
  std::vector<FieldElement> coeffs_;
};

}  // namespace divinv
