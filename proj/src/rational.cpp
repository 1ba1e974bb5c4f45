#include "divinv/rational.hpp"

#include "divinv/errors.hpp"

namespace divinv {

BigRational rational_pow(const BigRational& base, std::int64_t k) {
  if (k < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return rational_pow(BigRational(1) / base, -k);
  }
  BigRational result(1);
  BigRational b = base;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

namespace {
// (exponent, remainder-is-one) for x = q^exponent * rest
std::optional<std::int64_t> integer_log(BigInt x, std::uint64_t q) {
  std::int64_t k = 0;
  const BigInt bq(q);
  while (x > 1) {
    if (x % bq != 0) return std::nullopt;
    x /= bq;
    ++k;
  }
  if (x != 1) return std::nullopt;
  return k;
}
}  // namespace

std::optional<std::int64_t> exact_log(const BigRational& value, std::uint64_t q) {
  if (q < 2 || value <= 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const auto a = integer_log(num, q);
  const auto b = integer_log(den, q);
  if (!a || !b) return std::nullopt;
  if (*a != 0 && *b != 0) return std::nullopt;  // cannot happen for reduced fractions
  return *a - *b;
}

std::string numerator_string(const BigRational& x) {
  return boost::multiprecision::numerator(x).str();
}

std::string denominator_string(const BigRational& x) {
  return boost::multiprecision::denominator(x).str();
}

std::string to_string(const BigRational& x) {
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return numerator_string(x);
  return numerator_string(x) + "/" + den.str();
}

double to_double(const BigRational& x) { return x.convert_to<double>(); }

}  // namespace divinv
