#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "nttlab/error.hpp"

namespace nttlab {

__extension__ using uint128_t = unsigned __int128;

/// A modulus q with 2 <= q < 2^31. Products of two residues fit in 64 bits,
/// and reduction uses a Barrett constant so the hot loops avoid division.
/// Every method returns a canonical residue in [0, q).
class Modulus {
 public:
  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;

  explicit Modulus(std::uint64_t q);

  std::uint64_t value() const noexcept { return q_; }

  std::uint64_t reduce(std::uint64_t x) const noexcept {
    const auto est =
        static_cast<std::uint64_t>((static_cast<uint128_t>(x) * ratio_) >> 64);
    std::uint64_t r = x - est * q_;
    return r >= q_ ? r - q_ : r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : q_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce(a * b); }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;

  /// Throws Error(NotInvertible) when gcd(a, q) != 1.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.q_ == b.q_; }

 private:
  std::uint64_t q_;
  std::uint64_t ratio_;  // floor((2^64 - 1) / q)
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept;
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept;
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept;
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, const Modulus& q) noexcept;
std::uint64_t mod_inv(std::uint64_t a, const Modulus& q);

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition, primes strictly increasing.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t product() const;
  bool is_prime() const { return factors.size() == 1 && factors[0].multiplicity == 1; }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic for all 64-bit inputs (Miller-Rabin with a fixed base set).
bool is_prime(std::uint64_t m);

/// Trial division up to 2^21, then a primality test on the cofactor.
/// Requires 2 <= m < 2^62. Throws FactorTooLarge if the remaining cofactor
/// is composite and beyond trial-division reach.
Factorization factorize(std::uint64_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

constexpr bool is_power_of_two(std::uint64_t n) noexcept { return std::has_single_bit(n); }

/// log2 of a power of two.
constexpr unsigned log2_exact(std::uint64_t n) noexcept {
  return static_cast<unsigned>(std::countr_zero(n));
}

}  // namespace nttlab
