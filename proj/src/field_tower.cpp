#include "divinv/field_tower.hpp"

#include <string>

#include "divinv/errors.hpp"
#include "divinv/modular.hpp"

namespace divinv {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = [&] {
    std::uint32_t l = f.back();
    for (std::uint32_t c = 1; c < p; ++c)
      if (l * c % p == 1) return c;
    return 1u;
  }();
  while (a.size() > df) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's irreducibility test.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  if (d == 1) return true;
  const Poly x{0, 1};
  // x^{p^k} mod f for k = 0..d
  std::vector<Poly> frob(d + 1);
  frob[0] = poly_mod(x, f, p);
  for (std::uint32_t k = 1; k <= d; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  if (!poly_sub(frob[d], frob[0], p).empty()) return false;
  for (auto r : prime_factors(d)) {
    Poly g = poly_gcd(f, poly_sub(frob[d / r], frob[0], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t degree) {
  Poly out(degree, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                             std::uint64_t size_bound) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "e and n must be positive");
  const auto size = checked_pow(p, std::uint64_t{e} * n);
  if (!size || *size > size_bound || *size > (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::SizeBound, "field of size " + std::to_string(p) + "^" +
                                          std::to_string(e * n) + " exceeds bound " +
                                          std::to_string(size_bound));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->n = n;
  t->q = static_cast<std::uint32_t>(*checked_pow(p, e));
  t->degree = e * n;
  t->size = static_cast<std::uint32_t>(*size);

  // least irreducible modulus in base-p order of the non-leading coefficients
  const std::uint32_t d = t->degree;
  for (std::uint32_t c = 0; c < t->size; ++c) {
    Poly f = decode(c, p, d);
    f.resize(d + 1, 0);
    f[d] = 1;
    if (d > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) {
      t->modulus = std::move(f);
      break;
    }
  }
  if (t->modulus.empty()) throw Error(ErrorCode::Internal, "no irreducible modulus found");

  const std::uint64_t group_order = t->size - 1;
  const auto order_factors = prime_factors(group_order);
  auto is_generator = [&](std::uint32_t code) {
    if (group_order == 1) return code == 1;
    const Poly a = decode(code, p, d);
    for (auto r : order_factors) {
      Poly pw = poly_powmod(a, group_order / r, t->modulus, p);
      if (pw.size() == 1 && pw[0] == 1) return false;
    }
    return true;
  };
  for (std::uint32_t c = 1; c < t->size; ++c) {
    if (is_generator(c)) {
      t->generator = c;
      break;
    }
  }

  t->exp.resize(2 * group_order);
  t->log.assign(t->size, 0);
  const Poly g = decode(t->generator, p, d);
  Poly cur{1};
  for (std::uint64_t i = 0; i < group_order; ++i) {
    const std::uint32_t code = encode(cur, p);
    t->exp[i] = code;
    t->exp[i + group_order] = code;
    t->log[code] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, t->modulus, p);
  }

  t->qpow_mod.resize(n);
  std::uint64_t qk = 1 % group_order;
  for (std::uint32_t k = 0; k < n; ++k) {
    t->qpow_mod[k] = qk;
    qk = qk * t->q % group_order;
  }
  return FieldTower(std::move(t));
}

std::vector<std::uint32_t> FieldTower::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(degree(), 0);
  std::uint32_t code = a.code;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    out[i] = code % p();
    code /= p();
  }
  return out;
}

FieldElement FieldTower::add(FieldElement a, FieldElement b) const noexcept {
  if (p() == 2) return {a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    out += ((x % p() + y % p()) % p()) * place;
    x /= p();
    y /= p();
    place *= p();
  }
  return {out};
}

FieldElement FieldTower::neg(FieldElement a) const noexcept {
  if (p() == 2) return a;
  std::uint32_t x = a.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    out += ((p() - x % p()) % p()) * place;
    x /= p();
    place *= p();
  }
  return {out};
}

FieldElement FieldTower::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

FieldElement FieldTower::inv(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  const std::uint32_t m = size() - 1;
  return {tables_->exp[(m - tables_->log[a.code]) % m]};
}

FieldElement FieldTower::pow(FieldElement a, std::int64_t k) const {
  if (a.code == 0) {
    if (k < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  const auto m = static_cast<std::int64_t>(size() - 1);
  const auto lg = static_cast<std::int64_t>(tables_->log[a.code]);
  const auto km = ((k % m) + m) % m;
  const auto idx = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(lg) * static_cast<unsigned __int128>(km) % m);
  return {tables_->exp[idx]};
}

std::uint64_t FieldTower::multiplicative_order(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
  const std::uint64_t m = size() - 1;
  return m / gcd_u64(m, tables_->log[a.code]);
}

}  // namespace divinv
