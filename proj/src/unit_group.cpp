#include "divinv/unit_group.hpp"

#include <string>

#include "divinv/errors.hpp"
#include "divinv/modular.hpp"

namespace divinv {

std::uint64_t GroupParams::q() const { return checked_pow(p, e).value_or(0); }

std::optional<std::uint64_t> GroupParams::group_order() const {
  const auto qn = checked_pow(p, std::uint64_t{e} * n);
  if (!qn || m == 0) return std::nullopt;
  const auto tail = checked_pow(*qn, m - 1);
  if (!tail) return std::nullopt;
  const unsigned __int128 total = static_cast<unsigned __int128>(n) * (*qn - 1) * *tail;
  if (total > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

UnitGroup::UnitGroup(FieldTower field, std::size_t level)
    : field_(std::move(field)), level_(level) {
  const std::size_t qn = field_.size();
  tail_count_ = 1;
  for (std::size_t i = 1; i < level_; ++i) tail_count_ *= qn;
  unit_count_ = (qn - 1) * tail_count_;
  order_ = unit_count_ * field_.n();
}

std::unique_ptr<UnitGroup> UnitGroup::build(const FieldTower& field, std::size_t level,
                                            std::uint64_t order_bound) {
  if (level == 0 || level > kMaxLevel) {
    throw Error(ErrorCode::InvalidArgument, "level must be in 1.." + std::to_string(kMaxLevel));
  }
  const GroupParams params{field.p(), field.e(), field.n(), static_cast<std::uint32_t>(level)};
  const auto ord = params.group_order();
  if (!ord || *ord > order_bound) {
    throw Error(ErrorCode::SizeBound, "|G_m| exceeds bound " + std::to_string(order_bound));
  }
  std::unique_ptr<UnitGroup> g(new UnitGroup(field, level));

  const std::size_t qn = field.size();
  g->filtration_.reserve(level + 1);
  {
    std::vector<Index> u0(g->unit_count_);
    for (Index i = 0; i < g->unit_count_; ++i) u0[i] = i;
    g->filtration_.emplace_back(*g, std::move(u0));
  }
  std::size_t segment = g->tail_count_;
  for (std::size_t k = 1; k <= level; ++k) {
    std::vector<Index> uk(segment);
    for (Index i = 0; i < segment; ++i) uk[i] = i;
    g->filtration_.emplace_back(*g, std::move(uk));
    segment /= qn;
  }
  g->classes_ = compute_classes(*g);
  return g;
}

GroupParams UnitGroup::params() const noexcept {
  return {field_.p(), field_.e(), field_.n(), static_cast<std::uint32_t>(level_)};
}

void UnitGroup::decode_units(Index unit_index, FieldElement* out) const noexcept {
  const std::uint32_t qn = field_.size();
  for (std::size_t i = level_; i-- > 1;) {
    out[i] = {static_cast<std::uint32_t>(unit_index % qn)};
    unit_index /= qn;
  }
  out[0] = {static_cast<std::uint32_t>(unit_index + 1)};
}

Index UnitGroup::encode_units(const FieldElement* coeffs) const noexcept {
  const std::uint32_t qn = field_.size();
  Index idx = coeffs[0].code - 1;
  for (std::size_t i = 1; i < level_; ++i) idx = idx * qn + coeffs[i].code;
  return idx;
}

Index UnitGroup::multiply(Index a, Index b) const {
  Coeffs ua, ub, ub_twisted, out;
  const auto ja = static_cast<std::int64_t>(a / unit_count_);
  const auto jb = b / unit_count_;
  decode_units(a % unit_count_, ua.data());
  decode_units(b % unit_count_, ub.data());
  const std::span<FieldElement> tw(ub_twisted.data(), level_);
  twisted_frobenius(field_, std::span<const FieldElement>(ub.data(), level_), ja, tw);
  twisted_mul(field_, std::span<const FieldElement>(ua.data(), level_), tw,
              std::span<FieldElement>(out.data(), level_));
  const auto j = (static_cast<std::size_t>(ja) + jb) % field_.n();
  return j * unit_count_ + encode_units(out.data());
}

Index UnitGroup::inverse(Index a) const {
  // (u, j)^{-1} = (sigma^{-j}(u^{-1}), -j)
  Coeffs u, uinv, out;
  const auto j = static_cast<std::int64_t>(a / unit_count_);
  decode_units(a % unit_count_, u.data());
  twisted_inverse(field_, std::span<const FieldElement>(u.data(), level_),
                  std::span<FieldElement>(uinv.data(), level_));
  twisted_frobenius(field_, std::span<const FieldElement>(uinv.data(), level_), -j,
                    std::span<FieldElement>(out.data(), level_));
  const auto jinv = (field_.n() - static_cast<std::size_t>(j)) % field_.n();
  return jinv * unit_count_ + encode_units(out.data());
}

Index UnitGroup::encode(const TwistedSeries& unit, std::uint32_t shell) const {
  if (unit.level() != level_) {
    throw Error(ErrorCode::LevelMismatch, "series level " + std::to_string(unit.level()) +
                                              " in group of level " + std::to_string(level_));
  }
  if (!unit.is_unit()) throw Error(ErrorCode::NotAUnit, "group elements need a unit part");
  return (shell % field_.n()) * unit_count_ + encode_units(unit.coeffs().data());
}

std::pair<TwistedSeries, std::uint32_t> UnitGroup::decode(Index x) const {
  std::vector<FieldElement> c(level_);
  decode_units(x % unit_count_, c.data());
  return {TwistedSeries(field_, std::move(c)), shell(x)};
}

Index UnitGroup::uniformizer() const { return unit_count_; }

Index UnitGroup::project(Index x, const UnitGroup& lower) const {
  if (lower.level_ > level_ || lower.field_.size() != field_.size() || lower.n() != n()) {
    throw Error(ErrorCode::LevelMismatch, "projection target must be a lower level of the same tower");
  }
  Coeffs c;
  decode_units(x % unit_count_, c.data());
  return shell(x) * lower.unit_count_ + lower.encode_units(c.data());
}

std::vector<std::uint32_t> UnitGroup::class_shells() const {
  std::vector<std::uint32_t> out(classes_.count());
  for (std::size_t c = 0; c < classes_.count(); ++c) out[c] = shell(classes_.representative(c));
  return out;
}

BigRational UnitGroup::volume(std::size_t k) const {
  if (k == 0) return BigRational(1);
  const BigRational qn(static_cast<std::int64_t>(field_.size()));
  return rational_pow(qn, -static_cast<std::int64_t>(k)) / (BigRational(1) - BigRational(1) / qn);
}

}  // namespace divinv
