#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divinv/finite_group.hpp"
#include "divinv/linalg_mod.hpp"
#include "divinv/unit_group.hpp"

namespace divinv {

/// Irreducible characters of a finite group with values in Z/ell, where
/// ell = 1 (mod exponent) so every complex character value has an image.
/// Rows are sorted: trivial character first, then by (degree, value row).
struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  std::uint64_t ell = 0;
  std::uint64_t seed = 0;

  std::vector<Index> class_reps;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::size_t> inverse_class;
  /// Valuation class j of each conjugacy class (empty for abstract subgroups).
  std::vector<std::uint32_t> class_shells;
  /// Order of the unramified twist group (n for G_m, 1 otherwise).
  std::uint32_t twist_order = 1;
  /// Fixed primitive twist_order-th root of unity mod ell.
  std::uint64_t zeta = 1;

  std::vector<std::uint64_t> degrees;
  std::vector<ModVector> values;  // irreps x classes
  std::vector<std::string> labels;

  std::size_t irrep_count() const noexcept { return values.size(); }
  std::size_t class_count() const noexcept { return class_reps.size(); }
  /// Row index of an exact value vector, if it is an irreducible character.
  std::optional<std::size_t> find_row(const ModVector& row) const;
};

/// Least prime ell > 2|G|^2 with ell = 1 (mod exponent).
std::uint64_t verification_prime(std::uint64_t group_order, std::uint64_t exponent);

/// Dixon-Schneider: common eigenvectors of the class-sum action on the centre
/// of the group algebra over Z/ell. `seed` drives the random combinations of
/// class sums used for splitting; the result does not depend on it.
CharacterTable compute_character_table(const FiniteGroup& group, const ClassData& classes,
                                       std::uint64_t ell, std::uint64_t seed,
                                       std::vector<std::uint32_t> class_shells = {},
                                       std::uint32_t twist_order = 1);

/// Table of G_m with the default verification prime.
CharacterTable character_table(const UnitGroup& group, std::uint64_t seed);
/// Table of G_m over a caller-chosen prime (must satisfy the same constraints).
CharacterTable character_table(const UnitGroup& group, std::uint64_t seed, std::uint64_t ell);

/// Table of U_k as an abstract group, over the parent's prime so values can
/// be paired with restrictions of characters of G_m.
CharacterTable subgroup_character_table(const UnitGroup& group, std::size_t k, std::uint64_t ell,
                                        std::uint64_t seed);

/// (1/|S|) sum_{s in S} a(s) b(s^{-1}), lifted to a nonnegative integer.
std::uint64_t inner_product_over(const CharacterTable& table, const ModVector& a,
                                 const ModVector& b, const ClassHistogram& subgroup);
std::uint64_t inner_product_over(const CharacterTable& table, std::size_t a, std::size_t b,
                                 const ClassHistogram& subgroup);

ModVector dual_character(const CharacterTable& table, const ModVector& row);

/// chi(u, j) zeta^{index * j}.
ModVector twist_character(const CharacterTable& table, const ModVector& row,
                          std::uint32_t zeta_index);

struct Constituent {
  std::size_t irrep = 0;  // row in the subgroup table
  std::uint64_t multiplicity = 0;
};

/// Constituents of chi restricted to a subgroup, with exact multiplicities.
std::vector<Constituent> decompose_restriction(const CharacterTable& table, const ModVector& row,
                                               const ClassData& group_classes,
                                               const CharacterTable& sub_table,
                                               const Subgroup& sub);

/// Sum of squared degrees, exactly.
std::uint64_t sum_of_squared_degrees(const CharacterTable& table);
/// First orthogonality for all pairs of rows; returns the number of failures.
std::size_t first_orthogonality_failures(const CharacterTable& table);
/// Column orthogonality with centralizer orders |G|/|C|; returns failures.
std::size_t column_orthogonality_failures(const CharacterTable& table);
/// Every twist of every row is again a row and each twist permutes the rows.
bool twist_action_is_bijective(const CharacterTable& table);

}  // namespace divinv
