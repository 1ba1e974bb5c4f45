#include "divinv/character_table.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "divinv/errors.hpp"

namespace divinv {

std::optional<std::size_t> CharacterTable::find_row(const ModVector& row) const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == row) return i;
  return std::nullopt;
}

std::uint64_t verification_prime(std::uint64_t group_order, std::uint64_t exponent) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(group_order) * group_order * 2;
  if (bound >= (static_cast<unsigned __int128>(1) << 61)) {
    throw Error(ErrorCode::SizeBound, "group too large for a 64-bit verification prime");
  }
  return find_prime_congruent_one(static_cast<std::uint64_t>(bound), exponent);
}

namespace {

std::string fingerprint_label(std::uint64_t degree, const ModVector& row) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (auto v : row) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "d%llu-%08llx", static_cast<unsigned long long>(degree),
                static_cast<unsigned long long>(h & 0xffffffffull));
  return buf;
}

/// Matrix of multiplication by sum_j c_j C_j on the class-sum basis:
/// M[k][l] = sum_j c_j #{x in C_j : x^{-1} z_l in C_k}.
ModMatrix class_sum_action(const FiniteGroup& g, const ClassData& cd,
                           const std::vector<Index>& inverse_of, const ModArith& f,
                           const ModVector& coeffs) {
  const std::size_t r = cd.count();
  ModMatrix m(r, ModVector(r, 0));
  for (std::size_t l = 0; l < r; ++l) {
    const Index z = cd.representative(l);
    for (std::size_t j = 0; j < r; ++j) {
      if (coeffs[j] == 0) continue;
      for (Index x : cd.members[j]) {
        const std::size_t k = cd.class_of[g.multiply(inverse_of[x], z)];
        m[k][l] = f.add(m[k][l], coeffs[j]);
      }
    }
  }
  return m;
}

}  // namespace

CharacterTable compute_character_table(const FiniteGroup& group, const ClassData& classes,
                                       std::uint64_t ell, std::uint64_t seed,
                                       std::vector<std::uint32_t> class_shells,
                                       std::uint32_t twist_order) {
  const std::size_t r = classes.count();
  const std::uint64_t order = group.order();
  if (ell % classes.exponent != 1 % classes.exponent || !is_prime(ell) ||
      static_cast<unsigned __int128>(ell) <= static_cast<unsigned __int128>(order) * order * 2) {
    throw Error(ErrorCode::InvalidArgument, "ell must be a prime > 2|G|^2 with ell = 1 mod exp(G)");
  }
  if (twist_order == 0 || (ell - 1) % twist_order != 0) {
    throw Error(ErrorCode::InvalidArgument, "twist order must divide ell - 1");
  }
  const ModArith f(ell);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, ell - 1);

  std::vector<Index> inverse_of(order);
  for (Index x = 0; x < order; ++x) inverse_of[x] = group.inverse(x);

  // common eigenspaces of the class-sum matrices
  std::vector<std::vector<ModVector>> spaces;
  {
    std::vector<ModVector> full;
    for (std::size_t i = 0; i < r; ++i) {
      ModVector v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
  };
  constexpr std::size_t kRandomRounds = 4;
  for (std::size_t round = 0; !all_split() && round < kRandomRounds + r; ++round) {
    ModVector coeffs(r, 0);
    if (round < kRandomRounds) {
      for (auto& c : coeffs) c = pick(rng);
    } else {
      coeffs[round - kRandomRounds] = 1;  // single class sums as the fallback
    }
    const ModMatrix action = class_sum_action(group, classes, inverse_of, f, coeffs);
    std::vector<std::vector<ModVector>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const ModMatrix b = restrict_to_subspace(f, action, space);
      const auto roots = distinct_roots(f, characteristic_polynomial(f, b), rng);
      if (roots.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (auto lambda : roots) {
        ModMatrix shifted = b;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        const auto kernel = nullspace(f, shifted);
        std::vector<ModVector> sub;
        for (const auto& coords : kernel) {
          ModVector v(r, 0);
          for (std::size_t i = 0; i < space.size(); ++i) {
            if (coords[i] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(coords[i], space[i][k]));
          }
          sub.push_back(std::move(v));
        }
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != space.size()) {
        throw Error(ErrorCode::SplittingStalled, "class-sum action is not diagonalizable mod ell");
      }
    }
    spaces = std::move(next);
  }
  if (!all_split()) throw Error(ErrorCode::SplittingStalled, "eigenspaces did not separate");
  if (spaces.size() != r) throw Error(ErrorCode::Internal, "irreducible count differs from class count");

  const std::size_t id_class = classes.class_of[group.identity()];
  struct Row {
    std::uint64_t degree;
    ModVector values;
  };
  std::vector<Row> rows;
  for (const auto& space : spaces) {
    ModVector w = space.front();
    if (w[id_class] == 0) throw Error(ErrorCode::Internal, "central character vanishes at identity");
    const std::uint64_t scale = f.inv(w[id_class]);
    for (auto& x : w) x = f.mul(x, scale);
    // d^2 = |G| / sum_l w_l w_{l*} / |C_l|
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < r; ++l) {
      s = f.add(s, f.mul(f.mul(w[l], w[classes.inverse_class[l]]), f.inv(classes.size(l) % ell)));
    }
    const std::uint64_t dsq = f.mul(order % ell, f.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d) {
      if (d * d % ell == dsq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::Internal, "degree is not recoverable");
    ModVector chi(r);
    for (std::size_t l = 0; l < r; ++l) chi[l] = f.mul(f.mul(degree, w[l]), f.inv(classes.size(l) % ell));
    rows.push_back({degree, std::move(chi)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    const bool ta = std::all_of(a.values.begin(), a.values.end(), [](auto v) { return v == 1; });
    const bool tb = std::all_of(b.values.begin(), b.values.end(), [](auto v) { return v == 1; });
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });

  CharacterTable t;
  t.group_order = order;
  t.exponent = classes.exponent;
  t.ell = ell;
  t.seed = seed;
  for (std::size_t c = 0; c < r; ++c) {
    t.class_reps.push_back(classes.representative(c));
    t.class_sizes.push_back(classes.size(c));
  }
  t.inverse_class = classes.inverse_class;
  t.class_shells = std::move(class_shells);
  t.twist_order = twist_order;
  t.zeta = twist_order == 1 ? 1 : f.pow(primitive_root(ell), (ell - 1) / twist_order);
  std::set<std::string> used;
  for (auto& row : rows) {
    std::string label = fingerprint_label(row.degree, row.values);
    while (used.count(label)) label += "'";
    used.insert(label);
    t.labels.push_back(std::move(label));
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }

  if (sum_of_squared_degrees(t) != order) {
    throw Error(ErrorCode::Internal, "sum of squared degrees differs from |G|");
  }
  if (first_orthogonality_failures(t) != 0) {
    throw Error(ErrorCode::Internal, "computed rows are not orthonormal");
  }
  return t;
}

CharacterTable character_table(const UnitGroup& group, std::uint64_t seed) {
  return character_table(group, seed, verification_prime(group.order(), group.exponent()));
}

CharacterTable character_table(const UnitGroup& group, std::uint64_t seed, std::uint64_t ell) {
  return compute_character_table(group, group.classes(), ell, seed, group.class_shells(), group.n());
}

CharacterTable subgroup_character_table(const UnitGroup& group, std::size_t k, std::uint64_t ell,
                                        std::uint64_t seed) {
  const Subgroup& sub = group.congruence_subgroup(k);
  const ClassData cd = compute_classes(sub);
  return compute_character_table(sub, cd, ell, seed);
}

std::uint64_t inner_product_over(const CharacterTable& table, const ModVector& a,
                                 const ModVector& b, const ClassHistogram& subgroup) {
  const ModArith f(table.ell);
  std::uint64_t acc = 0;
  for (const auto& [c, count] : subgroup.counts) {
    acc = f.add(acc, f.mul(count % table.ell, f.mul(a[c], b[table.inverse_class[c]])));
  }
  const std::uint64_t v = f.mul(acc, f.inv(subgroup.subgroup_order % table.ell));
  if (v > table.group_order) {
    throw Error(ErrorCode::Internal, "inner product does not lift to a small integer");
  }
  return v;
}

std::uint64_t inner_product_over(const CharacterTable& table, std::size_t a, std::size_t b,
                                 const ClassHistogram& subgroup) {
  return inner_product_over(table, table.values.at(a), table.values.at(b), subgroup);
}

ModVector dual_character(const CharacterTable& table, const ModVector& row) {
  ModVector out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) out[c] = row[table.inverse_class[c]];
  return out;
}

ModVector twist_character(const CharacterTable& table, const ModVector& row,
                          std::uint32_t zeta_index) {
  if (table.class_shells.empty() || zeta_index % table.twist_order == 0) return row;
  const ModArith f(table.ell);
  ModVector out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) {
    const std::uint64_t e =
        (static_cast<std::uint64_t>(zeta_index) * table.class_shells[c]) % table.twist_order;
    out[c] = f.mul(row[c], f.pow(table.zeta, e));
  }
  return out;
}

std::vector<Constituent> decompose_restriction(const CharacterTable& table, const ModVector& row,
                                               const ClassData& group_classes,
                                               const CharacterTable& sub_table,
                                               const Subgroup& sub) {
  if (group_classes.group != &sub.parent()) {
    throw Error(ErrorCode::NotASubgroup, "subgroup belongs to a different group");
  }
  if (sub_table.ell != table.ell) {
    throw Error(ErrorCode::InvalidArgument, "subgroup table must use the same prime");
  }
  const ModArith f(table.ell);
  // value of chi on each subgroup class
  ModVector restricted(sub_table.class_count());
  for (std::size_t c = 0; c < sub_table.class_count(); ++c) {
    restricted[c] = row[group_classes.class_of[sub.to_parent(sub_table.class_reps[c])]];
  }
  const std::uint64_t inv_order = f.inv(sub_table.group_order % table.ell);
  std::vector<Constituent> out;
  std::uint64_t degree_sum = 0;
  for (std::size_t i = 0; i < sub_table.irrep_count(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < sub_table.class_count(); ++c) {
      acc = f.add(acc, f.mul(sub_table.class_sizes[c] % table.ell,
                             f.mul(restricted[c], sub_table.values[i][sub_table.inverse_class[c]])));
    }
    const std::uint64_t mult = f.mul(acc, inv_order);
    if (mult > table.group_order) throw Error(ErrorCode::Internal, "multiplicity does not lift");
    if (mult != 0) {
      out.push_back({i, mult});
      degree_sum += mult * sub_table.degrees[i];
    }
  }
  if (degree_sum != restricted[0]) {
    throw Error(ErrorCode::Internal, "restriction degrees do not add up");
  }
  return out;
}

std::uint64_t sum_of_squared_degrees(const CharacterTable& table) {
  std::uint64_t s = 0;
  for (auto d : table.degrees) s += d * d;
  return s;
}

std::size_t first_orthogonality_failures(const CharacterTable& table) {
  const ModArith f(table.ell);
  const std::uint64_t inv_order = f.inv(table.group_order % table.ell);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < table.irrep_count(); ++i) {
    for (std::size_t j = 0; j < table.irrep_count(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < table.class_count(); ++c) {
        acc = f.add(acc, f.mul(table.class_sizes[c] % table.ell,
                               f.mul(table.values[i][c], table.values[j][table.inverse_class[c]])));
      }
      if (f.mul(acc, inv_order) != (i == j ? 1u : 0u)) ++failures;
    }
  }
  return failures;
}

std::size_t column_orthogonality_failures(const CharacterTable& table) {
  const ModArith f(table.ell);
  std::size_t failures = 0;
  for (std::size_t a = 0; a < table.class_count(); ++a) {
    for (std::size_t b = 0; b < table.class_count(); ++b) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < table.irrep_count(); ++i) {
        acc = f.add(acc, f.mul(table.values[i][a], table.values[i][table.inverse_class[b]]));
      }
      const std::uint64_t expected = a == b ? table.group_order / table.class_sizes[a] : 0;
      if (acc != expected % table.ell) ++failures;
    }
  }
  return failures;
}

bool twist_action_is_bijective(const CharacterTable& table) {
  for (std::uint32_t z = 0; z < table.twist_order; ++z) {
    std::vector<char> hit(table.irrep_count(), 0);
    for (const auto& row : table.values) {
      const auto j = table.find_row(twist_character(table, row, z));
      if (!j || hit[*j]) return false;
      hit[*j] = 1;
    }
  }
  return true;
}

}  // namespace divinv
