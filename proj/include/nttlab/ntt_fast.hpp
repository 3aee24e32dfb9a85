#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nttlab/ntt_vector.hpp"
#include "nttlab/polynomial.hpp"

namespace nttlab {

/// Reverses the low log2(n) bits of b. Throws NotPowerOfTwo, InvalidArgument (b >= n).
std::uint64_t bit_reverse(std::uint64_t b, std::uint64_t n);

/// out[bit_reverse(i)] = v[i]. Its own inverse.
std::vector<std::uint64_t> bitrev_permute(std::span<const std::uint64_t> v);
void bitrev_permute_inplace(std::span<std::uint64_t> v);

/// Root powers for the butterfly stages, stage-major: the stage with m blocks
/// reads entries [m, 2m). Slot 0 is unused and holds 1.
///
/// Negacyclic tables (RootKind::Psi) hold fwd[k] = psi^brv(k), the odd-power
/// factors psi^(2j+1) of the CT recurrence in the order the stages visit them.
/// Cyclic tables (RootKind::Omega) hold, for k = m + b, omega^brv'(b) where
/// brv' reverses log2(n) - 1 bits; those split x^n - 1 instead of x^n + 1.
/// inv[k] is the modular inverse of fwd[k].
class TwiddleTable {
 public:
  RootKind kind() const noexcept { return kind_; }
  std::uint64_t q() const noexcept { return q_; }
  std::size_t n() const noexcept { return fwd_.size(); }
  std::span<const std::uint64_t> fwd() const noexcept { return fwd_; }
  std::span<const std::uint64_t> inv() const noexcept { return inv_; }
  std::uint64_t n_inv() const noexcept { return n_inv_; }

  /// Exponent e with fwd()[k] = root^e, root being psi or omega per kind().
  std::uint64_t exponent(std::size_t k) const;

 private:
  friend TwiddleTable precompute_tables(const ZqContext& ctx);
  friend TwiddleTable precompute_cyclic_tables(const ZqContext& ctx);

  RootKind kind_ = RootKind::Psi;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> fwd_;
  std::vector<std::uint64_t> inv_;
  std::uint64_t n_inv_ = 0;
};

/// Negacyclic table. Throws NotPowerOfTwo, MissingPsi.
TwiddleTable precompute_tables(const ZqContext& ctx);
/// Cyclic table. Throws NotPowerOfTwo.
TwiddleTable precompute_cyclic_tables(const ZqContext& ctx);

// In-place kernels. `a` must have table.n() entries, all below q. They return
// the number of butterflies executed, always (n/2) * log2(n).

/// Cooley-Tukey, normal-order input, bit-reversed output.
std::uint64_t forward_inplace(std::span<std::uint64_t> a, const TwiddleTable& table,
                              const Modulus& mod);
/// Gentleman-Sande, bit-reversed input, normal-order output, scaled by n^-1.
std::uint64_t inverse_inplace(std::span<std::uint64_t> a, const TwiddleTable& table,
                              const Modulus& mod);

struct TransformStats {
  std::uint64_t butterflies = 0;
};

/// Negacyclic forward transform; result is tagged Psi / BitReversed and
/// bitrev_permute(result.values()) == ntt_psi_naive(v).values().
NttVector ntt_ct(const Polynomial& v, const TwiddleTable& table, const ZqContext& ctx,
                 TransformStats* stats = nullptr);

/// Inverse of ntt_ct: bit-reversed Psi spectrum in, normal-order polynomial out.
Polynomial intt_gs(const NttVector& vhat, const TwiddleTable& table, const ZqContext& ctx,
                   TransformStats* stats = nullptr);

/// Cyclic counterparts built on omega; bit-reversed Omega spectra.
NttVector ntt_ct_cyclic(const Polynomial& v, const TwiddleTable& table, const ZqContext& ctx,
                        TransformStats* stats = nullptr);
Polynomial intt_gs_cyclic(const NttVector& vhat, const TwiddleTable& table, const ZqContext& ctx,
                          TransformStats* stats = nullptr);

}  // namespace nttlab
