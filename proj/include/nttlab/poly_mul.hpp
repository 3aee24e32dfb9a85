#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nttlab/ntt_fast.hpp"
#include "nttlab/ntt_reference.hpp"

namespace nttlab {

/// Selects the transform pair behind a product. Auto picks the butterflies
/// when n is a power of two and the direct sums otherwise.
enum class MulPath { Auto, Naive, Fast };

/// Whether independent pieces of work (matrix rows, batch entries) may run
/// on an OpenMP team.
enum class Execution { Serial, Parallel };

/// Component-wise a * b. Tags (root kind, ordering, context) must match and
/// are preserved. Since it acts index by index it is valid in either ordering.
NttVector pointwise_mul(const NttVector& a, const NttVector& b);

/// Component-wise a + b, same tag rules as pointwise_mul.
NttVector pointwise_add(const NttVector& a, const NttVector& b);

/// u * v mod (x^n - 1, q) through the omega transforms.
Polynomial mul_cyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                      MulPath path = MulPath::Auto);

/// u * v mod (x^n + 1, q) through the psi transforms. Throws MissingPsi on a
/// cyclic-only context.
Polynomial mul_negacyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                          MulPath path = MulPath::Auto);

/// Fast-path products reusing a precomputed table (Omega table for cyclic,
/// Psi table for negacyclic).
Polynomial mul_cyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                      const TwiddleTable& table);
Polynomial mul_negacyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                          const TwiddleTable& table);

/// Counts of transforms spent by a computation.
struct TransformLedger {
  std::uint64_t ntt_count = 0;
  std::uint64_t intt_count = 0;
  std::uint64_t pointwise_mul_count = 0;

  std::uint64_t transforms() const noexcept { return ntt_count + intt_count; }

  friend bool operator==(const TransformLedger&, const TransformLedger&) = default;
};

/// What a k x l matrix-vector product costs when every entry product runs its
/// own 2 forward + 1 inverse transform: 2kl forward, kl inverse.
TransformLedger per_product_baseline(std::size_t k, std::size_t l);

/// sum_i fs[i] * gs[i] in Z_q[x]/(x^n + 1), accumulated in the transform
/// domain so only one inverse transform runs. Adds 2t forward transforms,
/// t pointwise products and 1 inverse transform to `ledger`.
Polynomial sum_of_products(std::span<const Polynomial> fs, std::span<const Polynomial> gs,
                           const ZqContext& ctx, TransformLedger& ledger);

/// A polynomial held only in the transform domain (Psi, bit-reversed), e.g.
/// a matrix entry sampled there directly.
class NttDomainPoly {
 public:
  /// Throws FlavorMismatch / OrderingMismatch unless the vector is Psi and bit-reversed.
  explicit NttDomainPoly(NttVector values);

  /// Interprets `values` as a bit-reversed Psi spectrum under ctx.
  static NttDomainPoly from_values(std::vector<std::uint64_t> values, const ZqContext& ctx);

  const NttVector& spectrum() const noexcept { return values_; }
  const ZqContext& context() const noexcept { return values_.context(); }

 private:
  NttVector values_;
};

using NttMatrix = std::vector<std::vector<NttDomainPoly>>;

/// t = A s for a k x l matrix already in the transform domain. The vector is
/// transformed once (l forward), each row is accumulated pointwise and
/// inverted once (k inverse). Rows run concurrently under Execution::Parallel.
std::vector<Polynomial> matvec_ntt(const NttMatrix& a, std::span<const Polynomial> s,
                                   TransformLedger& ledger,
                                   Execution exec = Execution::Parallel);

/// Expands prod over odd i in [1, 2n) of (x - psi^i) and compares with x^n + 1.
bool crt_product_matches(std::uint64_t q, std::uint64_t n, std::uint64_t psi);

/// crt_product_matches for a negacyclic context. Throws InvalidArgument when
/// ctx.n() > n_max, MissingPsi on a cyclic context.
bool verify_crt_factorization(const ZqContext& ctx, std::size_t n_max);

}  // namespace nttlab
