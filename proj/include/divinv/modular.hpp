#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace divinv {

/// Integer power with overflow detection; nullopt when the result exceeds 2^64-1.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Arithmetic in Z/ell for an odd prime ell < 2^63.
class ModArith {
 public:
  explicit ModArith(std::uint64_t modulus) : mod_(modulus) {}

  std::uint64_t modulus() const noexcept { return mod_; }

  std::uint64_t reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(mod_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(mod_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= mod_ ? s - mod_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + mod_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : mod_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

  /// Symmetric lift of a residue to (-ell/2, ell/2).
  std::int64_t lift_signed(std::uint64_t a) const noexcept {
    return a > mod_ / 2 ? -static_cast<std::int64_t>(mod_ - a) : static_cast<std::int64_t>(a);
  }

 private:
  std::uint64_t mod_;
};

/// Least prime ell > lower_bound with ell = 1 (mod step). Throws
/// PrimeSearchExhausted after max_steps candidates.
std::uint64_t find_prime_congruent_one(std::uint64_t lower_bound, std::uint64_t step,
                                       std::uint64_t max_steps = 10'000'000);

/// Least primitive root modulo the prime ell.
std::uint64_t primitive_root(std::uint64_t ell);

}  // namespace divinv
