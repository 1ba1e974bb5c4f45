#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "divinv/modular.hpp"

namespace divinv {

/// Row-major dense matrix over Z/ell.
using ModMatrix = std::vector<std::vector<std::uint64_t>>;
/// Polynomial over Z/ell, constant term first, no trailing zeros (zero = {}).
using ModPoly = std::vector<std::uint64_t>;
using ModVector = std::vector<std::uint64_t>;

/// det(x I - A) via reduction to upper Hessenberg form.
ModPoly characteristic_polynomial(const ModArith& f, ModMatrix a);

/// Evaluate p at x.
std::uint64_t poly_eval(const ModArith& f, const ModPoly& p, std::uint64_t x);

/// Distinct roots in Z/ell, ascending (Cantor-Zassenhaus on gcd(p, x^ell - x)).
std::vector<std::uint64_t> distinct_roots(const ModArith& f, const ModPoly& p, std::mt19937_64& rng);

/// Basis of the right kernel {v : A v = 0}.
std::vector<ModVector> nullspace(const ModArith& f, ModMatrix a);

/// Rank by Gaussian elimination.
std::size_t rank(const ModArith& f, ModMatrix a);

/// Determinant by Gaussian elimination.
std::uint64_t determinant(const ModArith& f, ModMatrix a);

/// Matrix B of M restricted to the M-invariant span of `basis`:
/// M basis[i] = sum_j B[j][i] basis[j].
ModMatrix restrict_to_subspace(const ModArith& f, const ModMatrix& m,
                               const std::vector<ModVector>& basis);

}  // namespace divinv
