#include "divinv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "divinv/errors.hpp"

namespace divinv {

GroupModel::GroupModel(std::unique_ptr<UnitGroup> group, CharacterTable table, std::uint64_t seed)
    : group_(std::move(group)), table_(std::move(table)) {
  const auto& cd = group_->classes();
  whole_ = whole_group_histogram(cd);
  for (std::size_t k = 0; k <= group_->level(); ++k) {
    histograms_.push_back(class_histogram(cd, group_->congruence_subgroup(k)));
    level_tables_.push_back(subgroup_character_table(*group_, k, table_.ell, seed));
  }
}

GroupModel GroupModel::build(const GroupParams& params, std::uint64_t seed,
                             std::uint64_t order_bound, std::uint64_t field_bound) {
  auto field = FieldTower::build(params.p, params.e, params.n, field_bound);
  auto group = UnitGroup::build(field, params.m, order_bound);
  auto table = character_table(*group, seed);
  return GroupModel(std::move(group), std::move(table), seed);
}

std::uint64_t hom_dim(const GroupModel& model, const ModVector& a, const ModVector& b, std::size_t k) {
  return inner_product_over(model.table(), a, b, model.level_histogram(k));
}

std::uint64_t hom_dim(const GroupModel& model, std::size_t a, std::size_t b, std::size_t k) {
  return hom_dim(model, model.character(a), model.character(b), k);
}

std::vector<std::uint64_t> hom_dims(const GroupModel& model, const ModVector& a, const ModVector& b) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k <= model.level(); ++k) out.push_back(hom_dim(model, a, b, k));
  return out;
}

std::size_t dist(const GroupModel& model, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k <= model.level(); ++k)
    if (hom_dim(model, a, b, k) > 0) return k;
  throw Error(ErrorCode::Internal, "Hom over the trivial group vanished");
}

BigRational inv_from_hom_dims(std::uint64_t q, std::uint32_t n,
                              const std::vector<std::uint64_t>& hom) {
  const std::size_t m = hom.size() - 1;
  const BigRational qn = rational_pow(BigRational(static_cast<std::int64_t>(q)), n);
  const BigRational one_minus = BigRational(1) - BigRational(1) / qn;
  BigRational total(0);
  for (std::size_t k = 1; k < m; ++k) {
    total += rational_pow(qn, -static_cast<std::int64_t>(k)) / one_minus *
             BigRational(static_cast<std::int64_t>(hom[k]));
  }
  // sum_{k>=m} q^{-kn}/(1-q^{-n}) = q^{-mn}/(1-q^{-n})^2
  total += BigRational(static_cast<std::int64_t>(hom[m])) *
           rational_pow(qn, -static_cast<std::int64_t>(m)) / (one_minus * one_minus);
  return total;
}

BigRational inv_pairing(const GroupModel& model, std::size_t a, std::size_t b) {
  return inv_from_hom_dims(model.q(), model.n(), hom_dims(model, model.character(a), model.character(b)));
}

std::uint32_t twist_pair_count(const GroupModel& model, std::size_t a, std::size_t b) {
  std::uint32_t count = 0;
  for (std::uint32_t z = 0; z < model.n(); ++z)
    if (twist_character(model.table(), model.character(a), z) == model.character(b)) ++count;
  return count;
}

std::uint32_t twist_stabilizer(const GroupModel& model, std::size_t a) {
  return twist_pair_count(model, a, a);
}

BigRational normalization_constant(std::uint64_t q, std::uint32_t n) {
  const BigRational bq(static_cast<std::int64_t>(q));
  return (BigRational(1) - rational_pow(bq, -static_cast<std::int64_t>(n))) *
         rational_pow(bq, -static_cast<std::int64_t>(n) * (n - 1) / 2);
}

BigRational reducibility_inv(std::uint64_t q, std::uint32_t t, std::uint32_t r) {
  const BigRational c =
      rational_pow(BigRational(static_cast<std::int64_t>(q)), -static_cast<std::int64_t>(r) * t);
  const BigRational one_minus = BigRational(1) - c;
  return BigRational(static_cast<std::int64_t>(t) * t) * c / (one_minus * one_minus);
}

std::uint32_t solve_r(std::uint64_t q, std::uint32_t n, std::uint32_t t, const BigRational& inv) {
  if (t == 0 || n % t != 0) {
    throw Error(ErrorCode::DivisibilityViolation, "t = " + std::to_string(t) + " does not divide n");
  }
  for (std::uint32_t r = 1; r <= n; ++r) {
    if (reducibility_inv(q, t, r) == inv) {
      if ((n / t) % r != 0) {
        throw Error(ErrorCode::DivisibilityViolation,
                    "r = " + std::to_string(r) + " does not divide n/t = " + std::to_string(n / t));
      }
      return r;
    }
  }
  throw Error(ErrorCode::NoIntegerSolution,
              "no r in 1.." + std::to_string(n) + " for inv = " + to_string(inv) +
                  ", t = " + std::to_string(t));
}

Conductor conductor(std::uint64_t q, std::uint32_t n, const BigRational& inv, std::uint64_t d1,
                    std::uint64_t d2, std::uint32_t r1, std::uint32_t t_pair) {
  const BigRational vn = normalization_constant(q, n);
  const BigRational value =
      vn * vn * inv / BigRational(static_cast<std::int64_t>(d1 * d2));
  const auto e = exact_log(value, q);
  if (!e) {
    throw Error(ErrorCode::NotAPowerOfQ, "v_n^2 inv/(d1 d2) = " + to_string(value) +
                                             " is not a power of " + std::to_string(q));
  }
  Conductor c;
  c.f_tilde = -*e;
  c.f = c.f_tilde - static_cast<std::int64_t>(r1) * t_pair;
  if (c.f < 0) throw Error(ErrorCode::NegativeConductor, "f = " + std::to_string(c.f));
  return c;
}

std::size_t representation_level(const GroupModel& model, std::size_t a) {
  const auto& chi = model.character(a);
  const std::uint64_t d = model.table().degrees.at(a);
  for (std::size_t k = 0; k <= model.level(); ++k) {
    const auto& h = model.level_histogram(k);
    if (std::all_of(h.counts.begin(), h.counts.end(), [&](const auto& cc) { return chi[cc.first] == d; })) {
      return k;
    }
  }
  return model.level();
}

IrrepRecord compute_irrep_record(const GroupModel& model, std::size_t a) {
  IrrepRecord rec;
  rec.index = a;
  rec.label = model.table().labels.at(a);
  rec.degree = model.table().degrees.at(a);
  rec.t = twist_stabilizer(model, a);
  rec.level = representation_level(model, a);
  rec.inv = inv_pairing(model, a, a);
  rec.r = solve_r(model.q(), model.n(), rec.t, rec.inv);
  const auto c = conductor(model.q(), model.n(), rec.inv, rec.degree, rec.degree, rec.r, rec.t);
  rec.f = c.f;
  rec.f_tilde = c.f_tilde;
  return rec;
}

std::vector<IrrepRecord> compute_irrep_records(const GroupModel& model) {
  std::vector<IrrepRecord> out;
  for (std::size_t a = 0; a < model.irrep_count(); ++a) out.push_back(compute_irrep_record(model, a));
  return out;
}

InvariantRecord compute_pair_record(const GroupModel& model, const std::vector<IrrepRecord>& irreps,
                                    std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  InvariantRecord rec;
  rec.first = a;
  rec.second = b;
  rec.label1 = irreps.at(a).label;
  rec.label2 = irreps.at(b).label;
  rec.d1 = irreps[a].degree;
  rec.d2 = irreps[b].degree;
  rec.hom_dims = hom_dims(model, model.character(a), model.character(b));
  rec.dist = 0;
  while (rec.hom_dims[rec.dist] == 0) ++rec.dist;
  rec.inv = inv_from_hom_dims(model.q(), model.n(), rec.hom_dims);
  rec.t1 = irreps[a].t;
  rec.t2 = irreps[b].t;
  rec.t_pair = twist_pair_count(model, a, b);
  rec.r1 = irreps[a].r;
  rec.r2 = irreps[b].r;
  rec.dist_zero = rec.dist == 0;
  const auto c = conductor(model.q(), model.n(), rec.inv, rec.d1, rec.d2, rec.r1, rec.t_pair);
  rec.f = c.f;
  rec.f_tilde = c.f_tilde;
  rec.integrality_verified = true;
  return rec;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<InvariantRecord> compute_pair_records(const GroupModel& model,
                                                  const std::vector<IrrepRecord>& irreps,
                                                  unsigned threads) {
  const std::size_t n = irreps.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<InvariantRecord> out(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    out[i] = compute_pair_record(model, irreps, pairs[i].first, pairs[i].second);
  });
  return out;
}

PairTable::PairTable(std::size_t irreps, std::vector<InvariantRecord> records)
    : n_(irreps), records_(std::move(records)) {
  if (records_.size() != n_ * (n_ + 1) / 2) {
    throw Error(ErrorCode::InvalidArgument, "pair table needs every unordered pair");
  }
}

const InvariantRecord& PairTable::at(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  // row a starts after sum_{i<a} (n - i) records
  const std::size_t row_start = a * (2 * n_ - a + 1) / 2;
  return records_.at(row_start + (b - a));
}

std::vector<UltrametricViolation> check_ultrametric(const PairTable& pairs,
                                                    const std::vector<Triple>& triples) {
  std::vector<UltrametricViolation> out;
  for (const auto& tr : triples) {
    const auto& p13 = pairs.at(tr.a, tr.c);
    const auto& p12 = pairs.at(tr.a, tr.b);
    const auto& p23 = pairs.at(tr.b, tr.c);
    UltrametricViolation v;
    v.triple = tr;
    v.f13 = p13.f_tilde;
    v.f12 = p12.f_tilde;
    v.f23 = p23.f_tilde;
    v.conductor_form_fails = v.f13 > std::max(v.f12, v.f23);
    const auto norm = [](const InvariantRecord& r) {
      return r.inv / BigRational(static_cast<std::int64_t>(r.d1 * r.d2));
    };
    v.inv_form_fails = norm(p13) < std::min(norm(p12), norm(p23));
    if (v.conductor_form_fails || v.inv_form_fails) out.push_back(v);
  }
  return out;
}

std::vector<Triple> all_triples(std::size_t irreps) {
  std::vector<Triple> out;
  out.reserve(irreps * irreps * irreps);
  for (std::size_t a = 0; a < irreps; ++a)
    for (std::size_t b = 0; b < irreps; ++b)
      for (std::size_t c = 0; c < irreps; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<Triple> sampled_triples(std::size_t irreps, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, irreps - 1);
  std::vector<Triple> out(count);
  for (auto& t : out) {
    t.a = pick(rng);
    t.b = pick(rng);
    t.c = pick(rng);
  }
  return out;
}

}  // namespace divinv
