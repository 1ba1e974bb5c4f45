#include "divinv/modular.hpp"

#include <array>

#include "divinv/errors.hpp"

namespace divinv {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t ModArith::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  return powmod(a, e, mod_);
}

std::uint64_t ModArith::inv(std::uint64_t a) const {
  if (a % mod_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 modulo ell");
  return powmod(a, mod_ - 2, mod_);
}

std::uint64_t find_prime_congruent_one(std::uint64_t lower_bound, std::uint64_t step,
                                       std::uint64_t max_steps) {
  if (step == 0) throw Error(ErrorCode::InvalidArgument, "congruence step must be positive");
  // least candidate > lower_bound with candidate = 1 (mod step)
  std::uint64_t candidate = (lower_bound / step) * step + 1;
  if (candidate <= lower_bound) candidate += step;
  for (std::uint64_t i = 0; i < max_steps; ++i, candidate += step) {
    if (candidate >= (std::uint64_t{1} << 62)) break;
    if (is_prime(candidate)) return candidate;
  }
  throw Error(ErrorCode::PrimeSearchExhausted,
              "no prime = 1 mod " + std::to_string(step) + " above " + std::to_string(lower_bound));
}

std::uint64_t primitive_root(std::uint64_t ell) {
  if (ell == 2) return 1;
  const auto factors = prime_factors(ell - 1);
  for (std::uint64_t g = 2; g < ell; ++g) {
    bool ok = true;
    for (auto f : factors) {
      if (powmod(g, (ell - 1) / f, ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::Internal, "no primitive root found");
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::PrimeSearchExhausted: return "PrimeSearchExhausted";
    case ErrorCode::SplittingStalled: return "SplittingStalled";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NotAPowerOfQ: return "NotAPowerOfQ";
    case ErrorCode::NegativeConductor: return "NegativeConductor";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::ConvergenceRegion: return "ConvergenceRegion";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::IO: return "IO";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace divinv
