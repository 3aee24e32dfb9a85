#pragma once

#include <cstdint>
#include <optional>

#include "nttlab/modular.hpp"

namespace nttlab {

/// Positive-wrapped (mod x^n - 1) or negative-wrapped (mod x^n + 1).
enum class Flavor { Cyclic, Negacyclic };

/// True iff n divides gcd(p_1 - 1, ..., p_k - 1) over the distinct primes of q.
/// For prime q this is n | q - 1. Requires q >= 3, n >= 1.
bool is_pwc_friendly(std::uint64_t q, std::uint64_t n);

/// Same condition with 2n in place of n.
bool is_nwc_friendly(std::uint64_t q, std::uint64_t n);

/// Smallest primitive n-th root of unity in Z_q. For composite q the root
/// must also be principal (omega^(n/r) - 1 a unit for every prime r | n), so
/// the transforms built on it stay invertible. Throws NoRoot if none exists.
std::uint64_t find_omega(std::uint64_t q, std::uint64_t n);

/// Smallest psi with psi^2 = find_omega(q, n) and psi^n = -1 (mod q).
std::uint64_t find_psi(std::uint64_t q, std::uint64_t n);

/// Validated parameter bundle every transform references. Immutable; all
/// derived values are recomputed and checked by make_context.
class ZqContext {
 public:
  const Modulus& modulus() const noexcept { return modulus_; }
  std::uint64_t q() const noexcept { return modulus_.value(); }
  std::uint64_t n() const noexcept { return n_; }
  Flavor flavor() const noexcept { return flavor_; }

  std::uint64_t omega() const noexcept { return omega_; }
  std::uint64_t omega_inv() const noexcept { return omega_inv_; }
  std::uint64_t n_inv() const noexcept { return n_inv_; }

  bool has_psi() const noexcept { return psi_.has_value(); }
  /// Throws MissingPsi on cyclic-only contexts.
  std::uint64_t psi() const;
  std::uint64_t psi_inv() const;

  friend bool operator==(const ZqContext&, const ZqContext&) = default;

 private:
  friend ZqContext make_context(std::uint64_t q, std::uint64_t n, Flavor flavor);

  ZqContext(Modulus modulus, std::uint64_t n, Flavor flavor)
      : modulus_(modulus), n_(n), flavor_(flavor) {}

  Modulus modulus_;
  std::uint64_t n_;
  Flavor flavor_;
  std::uint64_t omega_ = 0;
  std::uint64_t omega_inv_ = 0;
  std::uint64_t n_inv_ = 0;
  std::optional<std::uint64_t> psi_;
  std::optional<std::uint64_t> psi_inv_;
};

/// Requires odd 3 <= q < 2^31 and n >= 2.
/// Errors: InvalidModulus, InvalidArgument, NotFriendly, NotInvertible.
ZqContext make_context(std::uint64_t q, std::uint64_t n, Flavor flavor);

}  // namespace nttlab
