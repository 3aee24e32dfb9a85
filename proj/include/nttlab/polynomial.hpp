#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nttlab/modular.hpp"

namespace nttlab {

/// Coefficient vector over Z_q, constant term first (coeffs()[i] multiplies x^i).
/// Every coefficient is a canonical residue in [0, q).
class Polynomial {
 public:
  /// Throws InvalidArgument on an empty vector or an out-of-range coefficient.
  Polynomial(std::vector<std::uint64_t> coeffs, std::uint64_t q);

  /// Reduces arbitrary signed integers into [0, q).
  static Polynomial from_integers(std::span<const std::int64_t> values, std::uint64_t q);

  static Polynomial zero(std::size_t n, std::uint64_t q);
  /// x^k in a length-n buffer.
  static Polynomial monomial(std::size_t n, std::size_t k, std::uint64_t q);

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::uint64_t q() const noexcept { return q_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t operator[](std::size_t i) const { return coeffs_[i]; }

  /// Releases the coefficient buffer (for in-place kernels).
  std::vector<std::uint64_t> take() && { return std::move(coeffs_); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t q_;
};

/// Coefficient-wise a + b and scalar * a; used by linearity checks.
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, std::uint64_t scalar);

}  // namespace nttlab
