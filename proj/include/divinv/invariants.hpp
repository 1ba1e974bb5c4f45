#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "divinv/character_table.hpp"
#include "divinv/rational.hpp"
#include "divinv/unit_group.hpp"

namespace divinv {

/// A built G_m together with its character table and the tables of its
/// congruence subgroups, all over the same prime.
class GroupModel {
 public:
  GroupModel(std::unique_ptr<UnitGroup> group, CharacterTable table, std::uint64_t seed);

  static GroupModel build(const GroupParams& params, std::uint64_t seed,
                          std::uint64_t order_bound = UnitGroup::kDefaultOrderBound,
                          std::uint64_t field_bound = FieldTower::kDefaultSizeBound);

  const UnitGroup& group() const noexcept { return *group_; }
  const CharacterTable& table() const noexcept { return table_; }
  GroupParams params() const noexcept { return group_->params(); }
  std::size_t level() const noexcept { return group_->level(); }
  std::uint64_t q() const noexcept { return group_->q(); }
  std::uint32_t n() const noexcept { return group_->n(); }
  std::size_t irrep_count() const noexcept { return table_.irrep_count(); }
  const ModVector& character(std::size_t i) const { return table_.values.at(i); }

  /// Classes of G_m met by U_k, k = 0..m.
  const ClassHistogram& level_histogram(std::size_t k) const { return histograms_.at(k); }
  const CharacterTable& level_table(std::size_t k) const { return level_tables_.at(k); }
  const ClassHistogram& whole() const noexcept { return whole_; }

 private:
  std::unique_ptr<UnitGroup> group_;
  CharacterTable table_;
  std::vector<ClassHistogram> histograms_;
  std::vector<CharacterTable> level_tables_;
  ClassHistogram whole_;
};

/// dim Hom_{U_k}(pi_a, pi_b).
std::uint64_t hom_dim(const GroupModel& model, const ModVector& a, const ModVector& b, std::size_t k);
std::uint64_t hom_dim(const GroupModel& model, std::size_t a, std::size_t b, std::size_t k);
std::vector<std::uint64_t> hom_dims(const GroupModel& model, const ModVector& a, const ModVector& b);

/// Least k with a nonzero Hom over U_k.
std::size_t dist(const GroupModel& model, std::size_t a, std::size_t b);

/// sum_{k>=1} vol(U_k) dim Hom_{U_k}: the terms for k < m are summed and the
/// constant tail d_a d_b vol(U_k), k >= m, is closed as a geometric series.
BigRational inv_from_hom_dims(std::uint64_t q, std::uint32_t n, const std::vector<std::uint64_t>& hom);
BigRational inv_pairing(const GroupModel& model, std::size_t a, std::size_t b);

/// #{zeta : twist(chi, zeta) = chi}.
std::uint32_t twist_stabilizer(const GroupModel& model, std::size_t a);
/// #{zeta : twist(chi_a, zeta) = chi_b}.
std::uint32_t twist_pair_count(const GroupModel& model, std::size_t a, std::size_t b);

/// v_n = (1 - q^{-n}) q^{-n(n-1)/2}.
BigRational normalization_constant(std::uint64_t q, std::uint32_t n);

/// t^2 q^{-rt} / (1 - q^{-rt})^2.
BigRational reducibility_inv(std::uint64_t q, std::uint32_t t, std::uint32_t r);

/// The r in 1..n with inv = t^2 q^{-rt}/(1-q^{-rt})^2. Throws
/// NoIntegerSolution when none exists and DivisibilityViolation when r does
/// not divide n/t.
std::uint32_t solve_r(std::uint64_t q, std::uint32_t n, std::uint32_t t, const BigRational& inv);

struct Conductor {
  std::int64_t f_tilde = 0;
  std::int64_t f = 0;
};

/// f~ = -log_q(v_n^2 inv / (d1 d2)) and f = f~ - r1 t_pair. Throws
/// NotAPowerOfQ or NegativeConductor.
Conductor conductor(std::uint64_t q, std::uint32_t n, const BigRational& inv, std::uint64_t d1,
                    std::uint64_t d2, std::uint32_t r1, std::uint32_t t_pair);

struct IrrepRecord {
  std::size_t index = 0;
  std::string label;
  std::uint64_t degree = 0;
  std::uint32_t t = 0;
  std::uint32_t r = 0;
  /// Least k with U_k in the kernel.
  std::size_t level = 0;
  BigRational inv;
  std::int64_t f = 0;        // f(pi x pi^vee)
  std::int64_t f_tilde = 0;  // f + r t
};

struct InvariantRecord {
  std::size_t first = 0, second = 0;  // first <= second
  std::string label1, label2;
  std::uint64_t d1 = 0, d2 = 0;
  std::vector<std::uint64_t> hom_dims;  // k = 0..m
  std::size_t dist = 0;
  BigRational inv;
  std::uint32_t t1 = 0, t2 = 0, t_pair = 0;
  std::uint32_t r1 = 0, r2 = 0;
  std::int64_t f = 0, f_tilde = 0;
  bool dist_zero = false;
  bool integrality_verified = false;
};

std::size_t representation_level(const GroupModel& model, std::size_t a);
IrrepRecord compute_irrep_record(const GroupModel& model, std::size_t a);
std::vector<IrrepRecord> compute_irrep_records(const GroupModel& model);
/// Pair record; a and b are canonicalized so that first <= second.
InvariantRecord compute_pair_record(const GroupModel& model, const std::vector<IrrepRecord>& irreps,
                                    std::size_t a, std::size_t b);

/// All unordered pairs, canonical order, optionally over `threads` workers.
std::vector<InvariantRecord> compute_pair_records(const GroupModel& model,
                                                  const std::vector<IrrepRecord>& irreps,
                                                  unsigned threads = 1);

/// Lookup for unordered pair records produced by compute_pair_records.
class PairTable {
 public:
  PairTable(std::size_t irreps, std::vector<InvariantRecord> records);
  const InvariantRecord& at(std::size_t a, std::size_t b) const;
  const std::vector<InvariantRecord>& records() const noexcept { return records_; }
  std::size_t irrep_count() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<InvariantRecord> records_;
};

struct Triple {
  std::size_t a = 0, b = 0, c = 0;
};

struct UltrametricViolation {
  Triple triple;
  std::int64_t f13 = 0, f12 = 0, f23 = 0;
  bool inv_form_fails = false;
  bool conductor_form_fails = false;
};

/// f~(1,3) <= max(f~(1,2), f~(2,3)) and the equivalent
/// inv13/(d1 d3) >= min(inv12/(d1 d2), inv23/(d2 d3)).
std::vector<UltrametricViolation> check_ultrametric(const PairTable& pairs,
                                                    const std::vector<Triple>& triples);

std::vector<Triple> all_triples(std::size_t irreps);
std::vector<Triple> sampled_triples(std::size_t irreps, std::size_t count, std::uint64_t seed);

/// Run fn(i) for i in [0, count) over up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace divinv
