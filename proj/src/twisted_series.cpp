#include "divinv/twisted_series.hpp"

#include <string>

#include "divinv/errors.hpp"

namespace divinv {

void twisted_mul(const FieldTower& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b, std::span<FieldElement> out) {
  const std::size_t m = out.size();
  for (std::size_t k = 0; k < m; ++k) out[k] = field.zero();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      if (b[j].code == 0) continue;
      const auto term = field.mul(a[i], field.frobenius(b[j], static_cast<std::int64_t>(i)));
      out[i + j] = field.add(out[i + j], term);
    }
  }
}

void twisted_frobenius(const FieldTower& field, std::span<const FieldElement> a, std::int64_t k,
                       std::span<FieldElement> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.frobenius(a[i], k);
}

void twisted_inverse(const FieldTower& field, std::span<const FieldElement> a,
                     std::span<FieldElement> out) {
  const std::size_t m = a.size();
  if (a[0].code == 0) throw Error(ErrorCode::NotAUnit, "series with zero residue");
  const FieldElement a0_inv = field.inv(a[0]);
  out[0] = a0_inv;
  // a_0 b_k = -sum_{i>=1} a_i sigma^i(b_{k-i})
  for (std::size_t k = 1; k < m; ++k) {
    FieldElement acc = field.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i].code == 0) continue;
      acc = field.add(acc, field.mul(a[i], field.frobenius(out[k - i], static_cast<std::int64_t>(i))));
    }
    out[k] = field.mul(a0_inv, field.neg(acc));
  }
}

TwistedSeries::TwistedSeries(FieldTower field, std::size_t level)
    : field_(std::move(field)), coeffs_(level) {
  if (level == 0) throw Error(ErrorCode::InvalidArgument, "truncation level must be >= 1");
}

TwistedSeries::TwistedSeries(FieldTower field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "truncation level must be >= 1");
}

TwistedSeries TwistedSeries::one(const FieldTower& field, std::size_t level) {
  return constant(field, level, field.one());
}

TwistedSeries TwistedSeries::uniformizer(const FieldTower& field, std::size_t level) {
  TwistedSeries s(field, level);
  if (level > 1) s.coeffs_[1] = field.one();
  return s;
}

TwistedSeries TwistedSeries::constant(const FieldTower& field, std::size_t level, FieldElement c) {
  TwistedSeries s(field, level);
  s.coeffs_[0] = c;
  return s;
}

bool TwistedSeries::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c.code != 0) return false;
  return true;
}

std::size_t TwistedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i].code != 0) return i;
  throw Error(ErrorCode::ZeroElement, "valuation of zero at level " + std::to_string(level()));
}

TwistedSeries TwistedSeries::inverse() const {
  TwistedSeries out(field_, level());
  twisted_inverse(field_, coeffs_, out.coeffs_);
  return out;
}

TwistedSeries TwistedSeries::frobenius(std::int64_t k) const {
  TwistedSeries out(field_, level());
  twisted_frobenius(field_, coeffs_, k, out.coeffs_);
  return out;
}

namespace {
void require_same_level(const TwistedSeries& a, const TwistedSeries& b) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::LevelMismatch, "levels " + std::to_string(a.level()) + " and " +
                                              std::to_string(b.level()));
  }
}
}  // namespace

TwistedSeries operator*(const TwistedSeries& a, const TwistedSeries& b) {
  require_same_level(a, b);
  TwistedSeries out(a.field_, a.level());
  twisted_mul(a.field_, a.coeffs_, b.coeffs_, out.coeffs_);
  return out;
}

TwistedSeries operator+(const TwistedSeries& a, const TwistedSeries& b) {
  require_same_level(a, b);
  TwistedSeries out(a.field_, a.level());
  for (std::size_t i = 0; i < a.level(); ++i) out.coeffs_[i] = a.field_.add(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

TwistedSeries operator-(const TwistedSeries& a, const TwistedSeries& b) {
  require_same_level(a, b);
  TwistedSeries out(a.field_, a.level());
  for (std::size_t i = 0; i < a.level(); ++i) out.coeffs_[i] = a.field_.sub(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

}  // namespace divinv
