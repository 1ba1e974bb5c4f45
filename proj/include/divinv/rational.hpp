#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace divinv {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational rational(std::int64_t num, std::int64_t den = 1) {
  return BigRational(BigInt(num), BigInt(den));
}

/// base^k for any integer k (base != 0 when k < 0).
BigRational rational_pow(const BigRational& base, std::int64_t k);

/// k with value == q^k, if value is an exact integer power of q (q >= 2).
std::optional<std::int64_t> exact_log(const BigRational& value, std::uint64_t q);

std::string numerator_string(const BigRational& x);
std::string denominator_string(const BigRational& x);
/// "num/den", or "num" when den == 1.
std::string to_string(const BigRational& x);

double to_double(const BigRational& x);

}  // namespace divinv
