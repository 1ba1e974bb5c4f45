#include "divinv/linalg_mod.hpp"

#include <algorithm>
#include <utility>

#include "divinv/errors.hpp"

namespace divinv {

namespace {

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t degree(const ModPoly& p) { return p.empty() ? 0 : p.size() - 1; }

ModPoly poly_mul(const ModArith& f, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

ModPoly poly_sub(const ModArith& f, ModPoly a, const ModPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

/// Remainder of a modulo nonzero b.
ModPoly poly_rem(const ModArith& f, ModPoly a, const ModPoly& b) {
  trim(a);
  const std::uint64_t lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() > db) {
    const std::uint64_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

ModPoly poly_quot(const ModArith& f, ModPoly a, const ModPoly& b) {
  trim(a);
  const std::uint64_t lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  ModPoly q(a.size() - db, 0);
  while (!a.empty() && a.size() > db) {
    const std::uint64_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return q;
}

ModPoly make_monic(const ModArith& f, ModPoly p) {
  trim(p);
  if (p.empty()) return p;
  const auto li = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, li);
  return p;
}

ModPoly poly_gcd(const ModArith& f, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

ModPoly poly_powmod(const ModArith& f, ModPoly base, std::uint64_t e, const ModPoly& mod) {
  ModPoly r{1};
  r = poly_rem(f, r, mod);
  base = poly_rem(f, std::move(base), mod);
  while (e > 0) {
    if (e & 1) r = poly_rem(f, poly_mul(f, r, base), mod);
    base = poly_rem(f, poly_mul(f, base, base), mod);
    e >>= 1;
  }
  return r;
}

void split_roots(const ModArith& f, const ModPoly& g, std::mt19937_64& rng,
                 std::vector<std::uint64_t>& out) {
  const std::size_t d = degree(g);
  if (g.empty() || d == 0) return;
  if (d == 1) {
    out.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  const std::uint64_t ell = f.modulus();
  std::uniform_int_distribution<std::uint64_t> pick(0, ell - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const ModPoly shifted{pick(rng), 1};
    ModPoly s = poly_powmod(f, shifted, (ell - 1) / 2, g);
    s = poly_sub(f, std::move(s), ModPoly{1});
    ModPoly h = poly_gcd(f, g, s);
    const std::size_t dh = degree(h);
    if (!h.empty() && dh > 0 && dh < d) {
      split_roots(f, h, rng, out);
      split_roots(f, make_monic(f, poly_quot(f, g, h)), rng, out);
      return;
    }
  }
  throw Error(ErrorCode::SplittingStalled, "root splitting did not separate factors");
}

}  // namespace

std::uint64_t poly_eval(const ModArith& f, const ModPoly& p, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

ModPoly characteristic_polynomial(const ModArith& f, ModMatrix h) {
  const std::size_t n = h.size();
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv_p = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      const std::uint64_t u = f.mul(h[k][j], inv_p);
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<ModPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    ModPoly next(k + 2, 0);
    for (std::size_t d = 0; d < p[k].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[k][d]);
      next[d] = f.sub(next[d], f.mul(h[k][k], p[k][d]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = f.mul(prod, h[i + 1][i]);
      if (prod == 0) break;
      const std::uint64_t coef = f.mul(h[i][k], prod);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = f.sub(next[d], f.mul(coef, p[i][d]));
    }
    trim(next);
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> distinct_roots(const ModArith& f, const ModPoly& poly,
                                          std::mt19937_64& rng) {
  ModPoly p = make_monic(f, poly);
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::uint64_t> out;
  if (degree(p) == 0) return out;
  // product of the distinct linear factors: gcd(p, x^ell - x)
  ModPoly xl = poly_powmod(f, ModPoly{0, 1}, f.modulus(), p);
  ModPoly g = poly_gcd(f, p, poly_sub(f, std::move(xl), ModPoly{0, 1}));
  if (!g.empty() && g[0] == 0) {
    out.push_back(0);
    g = make_monic(f, poly_quot(f, g, ModPoly{0, 1}));
  }
  split_roots(f, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
/// Reduced row echelon form in place over the first `cols` columns; returns pivot columns.
std::vector<std::size_t> rref(const ModArith& f, ModMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const std::uint64_t inv_p = f.inv(a[row][c]);
    for (auto& x : a[row]) x = f.mul(x, inv_p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const std::uint64_t u = a[r][c];
      for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] = f.sub(a[r][k], f.mul(u, a[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}
}  // namespace

std::vector<ModVector> nullspace(const ModArith& f, ModMatrix a) {
  if (a.empty()) return {};
  const std::size_t cols = a.front().size();
  const auto pivots = rref(f, a, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ModArith& f, ModMatrix a) {
  if (a.empty()) return 0;
  return rref(f, a, a.front().size()).size();
}

std::uint64_t determinant(const ModArith& f, ModMatrix a) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const std::uint64_t inv_p = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t u = f.mul(a[r][c], inv_p);
      for (std::size_t k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(u, a[c][k]));
    }
  }
  return det;
}

ModMatrix restrict_to_subspace(const ModArith& f, const ModMatrix& m,
                               const std::vector<ModVector>& basis) {
  const std::size_t d = basis.size();
  const std::size_t r = m.size();
  // rows [V | M V]; RREF on the V block leaves [I | B] on top
  ModMatrix aug(r, ModVector(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      aug[k][i] = basis[i][k];
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < r; ++l) {
        if (m[k][l] != 0 && basis[i][l] != 0) acc = f.add(acc, f.mul(m[k][l], basis[i][l]));
      }
      aug[k][d + i] = acc;
    }
  }
  const auto pivots = rref(f, aug, d);
  if (pivots.size() != d) throw Error(ErrorCode::Internal, "subspace basis is not independent");
  ModMatrix b(d, ModVector(d, 0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) b[j][i] = aug[j][d + i];
  for (std::size_t k = d; k < r; ++k)
    for (std::size_t i = 0; i < d; ++i)
      if (aug[k][d + i] != 0) throw Error(ErrorCode::Internal, "subspace is not invariant");
  return b;
}

}  // namespace divinv
