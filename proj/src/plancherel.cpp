#include "divinv/plancherel.hpp"

#include <cmath>
#include <sstream>

#include "divinv/errors.hpp"

namespace divinv {

namespace {

using Poly = std::vector<BigRational>;  // ordinary polynomial, constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const LaurentPoly& p, std::int64_t shift) {
  Poly out;
  for (const auto& [k, c] : p.terms()) {
    const std::int64_t e = k + shift;
    if (e < 0) throw Error(ErrorCode::Internal, "negative exponent in polynomial conversion");
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1);
    out[e] = c;
  }
  trim(out);
  return out;
}

LaurentPoly from_poly(const Poly& p, std::int64_t shift) {
  std::map<std::int64_t, BigRational> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace(static_cast<std::int64_t>(i) + shift, p[i]);
  return LaurentPoly(std::move(terms));
}

// a = q b + r
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const BigRational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(std::map<std::int64_t, BigRational> terms) {
  for (auto& [k, c] : terms)
    if (c != 0) terms_.emplace(k, c);
}

LaurentPoly LaurentPoly::constant(const BigRational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigRational& c, std::int64_t k) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(std::int64_t k, const BigRational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero Laurent polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero Laurent polynomial");
  return terms_.rbegin()->first;
}

BigRational LaurentPoly::coefficient(std::int64_t k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational LaurentPoly::leading() const { return terms_.empty() ? BigRational(0) : terms_.rbegin()->second; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) out.add_term(i + j, a * b);
  return out;
}

LaurentPoly LaurentPoly::operator*(const BigRational& c) const {
  LaurentPoly out;
  for (const auto& [k, a] : terms_) out.add_term(k, a * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [i, a] : terms_) out.terms_.emplace(i + k, a);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [i, a] : terms_) out.terms_.emplace(-i, a);
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> y) const {
  std::complex<double> acc = 0;
  for (const auto& [k, c] : terms_) acc += to_double(c) * std::pow(y, static_cast<double>(k));
  return acc;
}

BigRational LaurentPoly::evaluate(const BigRational& y) const {
  BigRational acc(0);
  for (const auto& [k, c] : terms_) acc += c * rational_pow(y, k);
  return acc;
}

LaurentRationalFn::LaurentRationalFn(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const std::int64_t shift = -std::min(num.min_exponent(), den.min_exponent());
  const Poly n = to_poly(num, shift);
  const Poly d = to_poly(den, shift);
  const Poly g = poly_gcd(n, d);
  Poly nq, dq, rem;
  divmod(n, g, nq, rem);
  divmod(d, g, dq, rem);
  // move any power of Y left in the denominator to the numerator
  std::size_t low = 0;
  while (dq[low] == 0) ++low;
  const BigRational lead = dq.back();
  for (auto& c : nq) c /= lead;
  for (auto& c : dq) c /= lead;
  num_ = from_poly(nq, -static_cast<std::int64_t>(low));
  den_ = from_poly(dq, -static_cast<std::int64_t>(low));
}

LaurentRationalFn LaurentRationalFn::constant(const BigRational& c) {
  return LaurentRationalFn(LaurentPoly::constant(c), LaurentPoly::constant(1));
}

bool LaurentRationalFn::is_constant() const {
  return den_ == LaurentPoly::constant(1) &&
         (num_.is_zero() || (num_.terms().size() == 1 && num_.terms().begin()->first == 0));
}

LaurentRationalFn LaurentRationalFn::operator+(const LaurentRationalFn& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

LaurentRationalFn LaurentRationalFn::operator*(const LaurentRationalFn& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

LaurentRationalFn LaurentRationalFn::operator*(const BigRational& c) const { return {num_ * c, den_}; }

LaurentRationalFn LaurentRationalFn::reciprocal() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return {den_, num_};
}

LaurentRationalFn LaurentRationalFn::inverted() const { return {num_.inverted(), den_.inverted()}; }

bool LaurentRationalFn::equals(const LaurentRationalFn& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::complex<double> LaurentRationalFn::evaluate(std::complex<double> y) const {
  return num_.evaluate(y) / den_.evaluate(y);
}

namespace {
std::string poly_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (k != 0) out << "Y^" << k;
  }
  return out.str();
}
}  // namespace

std::string LaurentRationalFn::to_string() const {
  return "[" + poly_string(num_) + "] / [" + poly_string(den_) + "]";
}

std::size_t root_multiplicity(const LaurentPoly& p, const BigRational& y0) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no finite multiplicity");
  Poly a = to_poly(p, -p.min_exponent());
  const Poly linear{-y0, BigRational(1)};
  std::size_t mult = 0;
  for (;;) {
    Poly q, r;
    divmod(a, linear, q, r);
    if (!r.empty()) return mult;
    ++mult;
    a = std::move(q);
  }
}

namespace {

BigRational big(std::uint64_t v) { return BigRational(BigInt(v)); }

// (1 - Y^t)(1 - Y^{-t}) = 2 - Y^t - Y^{-t}
LaurentPoly pole_factor(std::int64_t t) {
  return LaurentPoly::constant(2) - LaurentPoly::monomial(1, t) - LaurentPoly::monomial(1, -t);
}

// (1 - cY^t)(1 - cY^{-t})
LaurentPoly zero_factor(const BigRational& c, std::int64_t t) {
  return (LaurentPoly::constant(1) - LaurentPoly::monomial(c, t)) *
         (LaurentPoly::constant(1) - LaurentPoly::monomial(c, -t));
}

}  // namespace

MuInverse mu_inverse_fn(const InvariantRecord& record, std::uint64_t q) {
  (void)q;
  MuInverse out;
  if (record.dist == 0) {
    const std::int64_t t = record.t1;
    const BigRational d2 = big(record.d1) * big(record.d1);
    const LaurentRationalFn un(LaurentPoly::constant(big(t * t)), pole_factor(t));
    out.fn = (un + LaurentRationalFn::constant(record.inv)) * (BigRational(1) / d2);
    out.equal_case = true;
    out.reduced = record.first != record.second;
  } else {
    out.fn = LaurentRationalFn::constant(record.inv / (big(record.d1) * big(record.d2)));
  }
  return out;
}

std::vector<IdentityCheck> plancherel_factorization_check(const InvariantRecord& record,
                                                          std::uint64_t q, std::uint32_t n) {
  std::vector<IdentityCheck> out;
  const auto mu_inv = mu_inverse_fn(record, q);
  const BigRational vn = normalization_constant(q, n);
  const BigRational qf = rational_pow(big(q), record.f);
  if (mu_inv.equal_case) {
    const std::int64_t t = record.t1;
    const BigRational c = rational_pow(big(q), -static_cast<std::int64_t>(record.r1) * t);
    const BigRational d2 = big(record.d1) * big(record.d1);
    const BigRational scale = big(t * t) / ((1 - c) * (1 - c));

    const LaurentRationalFn lhs = mu_inv.fn * d2;
    const LaurentRationalFn rhs(zero_factor(c, t) * scale, pole_factor(t));
    out.push_back({"factorized-mu-inverse", lhs == rhs, lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string()});

    const LaurentRationalFn mu = mu_inv.fn.reciprocal();
    const LaurentRationalFn mu_rhs(pole_factor(t) * (vn * vn * qf), zero_factor(c, t));
    out.push_back({"factorized-mu", mu == mu_rhs, mu == mu_rhs ? "" : mu.to_string() + " vs " + mu_rhs.to_string()});

    const BigRational deg_sq = vn * vn * qf * scale;
    out.push_back({"degree-square", deg_sq == d2, deg_sq == d2 ? "" : to_string(deg_sq) + " vs " + to_string(d2)});
  } else {
    const bool constant = mu_inv.fn.is_constant();
    out.push_back({"constant", constant, constant ? "" : mu_inv.fn.to_string()});
    const BigRational mu = big(record.d1) * big(record.d2) / record.inv;
    const BigRational expected = vn * vn * qf;
    out.push_back({"constant-mu", mu == expected, mu == expected ? "" : to_string(mu) + " vs " + to_string(expected)});
  }
  return out;
}

bool is_symmetric(const LaurentRationalFn& fn) { return fn == fn.inverted(); }

std::size_t pole_order_at_one(const LaurentRationalFn& fn) {
  return root_multiplicity(fn.denominator(), BigRational(1));
}

std::vector<std::int64_t> shell_sums(const GroupModel& model, std::size_t a, std::size_t b) {
  const auto& table = model.table();
  const ModArith f(table.ell);
  const auto& chi_a = model.character(a);
  const auto& chi_b = model.character(b);
  std::vector<std::uint64_t> acc(model.n(), 0);
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    const std::uint64_t term =
        f.mul(f.reduce(table.class_sizes[c]), f.mul(chi_a[c], chi_b[table.inverse_class[c]]));
    acc[table.class_shells[c]] = f.add(acc[table.class_shells[c]], term);
  }
  const std::uint64_t u0 = model.group().order() / model.n();
  const std::uint64_t scale = f.inv(f.reduce(u0));
  std::vector<std::int64_t> out;
  for (auto v : acc) out.push_back(f.lift_signed(f.mul(v, scale)));
  return out;
}

std::complex<double> evaluate_at_s(const LaurentRationalFn& fn, std::uint64_t q, std::complex<double> s) {
  return fn.evaluate(std::exp(-s * std::log(static_cast<double>(q))));
}

std::complex<double> series_oracle(const GroupModel& model, const InvariantRecord& record,
                                   std::complex<double> s, const OracleOptions& options) {
  if (s.real() >= 0) throw Error(ErrorCode::ConvergenceRegion, "the shell series needs Re s < 0");
  using C = std::complex<double>;
  const std::int64_t n = model.n();
  const std::int64_t m = static_cast<std::int64_t>(model.level());
  const std::int64_t N = options.shells;
  const double qn = std::pow(static_cast<double>(model.q()), static_cast<double>(n));
  const double d1d2 = static_cast<double>(record.d1 * record.d2);
  const C y = std::exp(-s * std::log(static_cast<double>(model.q())));
  const C yn = std::pow(y, static_cast<double>(n));

  const std::size_t second = record.dist == 0 ? record.first : record.second;
  const auto S = shell_sums(model, record.first, second);

  const auto volume = [&](std::int64_t k) { return std::pow(qn, -static_cast<double>(k)) / (1 - 1 / qn); };
  const auto hom = [&](std::int64_t k) {
    return static_cast<double>(record.hom_dims[std::min(k, m)]);
  };
  const auto negative_shell = [&](std::int64_t mp) {
    C acc = 0;
    for (std::int64_t k = mp; k < mp + n; ++k) {
      const auto idx = static_cast<std::size_t>(((k % n) + n) % n);
      acc += std::pow(y, static_cast<double>(k)) * static_cast<double>(S[idx]);
    }
    return acc / (1.0 - yn);
  };

  C total = 0;
  for (std::int64_t mp = -N; mp <= 0; ++mp) total += negative_shell(mp);
  for (std::int64_t mp = 1; mp <= N; ++mp) total += volume(mp) * hom(mp);
  if (options.close_tails) {
    C block = 0;
    for (std::int64_t mp = -N - n; mp <= -N - 1; ++mp) block += negative_shell(mp);
    total += block / (1.0 - 1.0 / yn);
    std::int64_t start = N + 1;
    for (; start < m; ++start) total += volume(start) * hom(start);
    total += d1d2 * std::pow(qn, -static_cast<double>(start)) / ((1 - 1 / qn) * (1 - 1 / qn));
  }
  return total / d1d2;
}

}  // namespace divinv
