#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "divinv/field_tower.hpp"
#include "divinv/finite_group.hpp"
#include "divinv/rational.hpp"
#include "divinv/twisted_series.hpp"

namespace divinv {

struct GroupParams {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t n = 2;
  std::uint32_t m = 1;

  std::uint64_t q() const;
  /// n (q^n - 1) q^{n(m-1)}, or nullopt on overflow.
  std::optional<std::uint64_t> group_order() const;
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// G_m = D^* / <varpi> U_m, realized as pairs (u, j) standing for u Pi^j with
/// u in R_m^* and j in Z/n. The product is (u, j)(u', j') = (u sigma^j(u'), j + j').
///
/// Elements are numbered lexicographically on (j, a_0, a_1, ..., a_{m-1}) so
/// the identity is 0, U_0 is the block j = 0, and U_k (k >= 1) is the initial
/// segment of length q^{n(m-k)}.
class UnitGroup final : public FiniteGroup {
 public:
  static constexpr std::uint64_t kDefaultOrderBound = 100'000;
  static constexpr std::size_t kMaxLevel = 64;

  /// Throws SizeBound when |G_m| exceeds order_bound.
  static std::unique_ptr<UnitGroup> build(const FieldTower& field, std::size_t level,
                                          std::uint64_t order_bound = kDefaultOrderBound);

  UnitGroup(const UnitGroup&) = delete;
  UnitGroup& operator=(const UnitGroup&) = delete;

  std::size_t order() const override { return order_; }
  Index identity() const override { return 0; }
  Index multiply(Index a, Index b) const override;
  Index inverse(Index a) const override;

  const FieldTower& field() const noexcept { return field_; }
  GroupParams params() const noexcept;
  std::size_t level() const noexcept { return level_; }
  std::uint32_t n() const noexcept { return field_.n(); }
  std::uint32_t q() const noexcept { return field_.q(); }
  /// |R_m^*| = (q^n - 1) q^{n(m-1)}.
  std::size_t unit_count() const noexcept { return unit_count_; }

  Index encode(const TwistedSeries& unit, std::uint32_t shell) const;
  std::pair<TwistedSeries, std::uint32_t> decode(Index x) const;
  /// The image of Pi: (1, 1).
  Index uniformizer() const;
  /// j for the element u Pi^j, i.e. its valuation modulo n.
  std::uint32_t shell(Index x) const noexcept { return static_cast<std::uint32_t>(x / unit_count_); }
  /// Image of x under truncation G_m -> G_{lower.level()}; same field required.
  Index project(Index x, const UnitGroup& lower) const;

  /// U_k for k = 0..m: U_0 = {(u, 0)}, U_k = {(u, 0) : v(u - 1) >= k}.
  const Subgroup& congruence_subgroup(std::size_t k) const { return filtration_.at(k); }
  const ClassData& classes() const noexcept { return classes_; }
  std::uint64_t exponent() const noexcept { return classes_.exponent; }
  std::vector<std::uint32_t> class_shells() const;

  /// vol(U_k) with vol(U_0) = 1: q^{-kn} / (1 - q^{-n}) for k >= 1.
  BigRational volume(std::size_t k) const;

 private:
  UnitGroup(FieldTower field, std::size_t level);

  using Coeffs = std::array<FieldElement, kMaxLevel>;
  void decode_units(Index unit_index, FieldElement* out) const noexcept;
  Index encode_units(const FieldElement* coeffs) const noexcept;

  FieldTower field_;
  std::size_t level_;
  std::size_t unit_count_;
  std::size_t order_;
  std::size_t tail_count_;  // q^{n(m-1)}
  std::vector<Subgroup> filtration_;
  ClassData classes_;
};

}  // namespace divinv
