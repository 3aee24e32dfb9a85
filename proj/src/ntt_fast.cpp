#include "nttlab/ntt_fast.hpp"

#include <string>

namespace nttlab {

std::uint64_t bit_reverse(std::uint64_t b, std::uint64_t n) {
  if (!is_power_of_two(n)) throw Error(ErrorCode::NotPowerOfTwo, std::to_string(n));
  if (b >= n) throw Error(ErrorCode::InvalidArgument, "index out of range for bit reversal");
  const unsigned bits = log2_exact(n);
  std::uint64_t r = 0;
  for (unsigned i = 0; i < bits; ++i) {
    r = (r << 1) | (b & 1);
    b >>= 1;
  }
  return r;
}

void bitrev_permute_inplace(std::span<std::uint64_t> v) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) throw Error(ErrorCode::NotPowerOfTwo, std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bit_reverse(i, n);
    if (i < j) std::swap(v[i], v[j]);
  }
}

std::vector<std::uint64_t> bitrev_permute(std::span<const std::uint64_t> v) {
  std::vector<std::uint64_t> out(v.begin(), v.end());
  bitrev_permute_inplace(out);
  return out;
}

std::uint64_t TwiddleTable::exponent(std::size_t k) const {
  const std::size_t n = fwd_.size();
  if (k == 0) return 0;
  if (kind_ == RootKind::Psi) return bit_reverse(k, n);
  // k = m + b with m the largest power of two <= k.
  const std::size_t m = std::size_t{1} << (63 - std::countl_zero(static_cast<std::uint64_t>(k)));
  return bit_reverse(k - m, n / 2);
}

namespace {

void require_power_of_two(const ZqContext& ctx) {
  if (!is_power_of_two(ctx.n())) {
    throw Error(ErrorCode::NotPowerOfTwo, "fast transforms need a power-of-two n, got " +
                                              std::to_string(ctx.n()));
  }
}

}  // namespace

namespace {

// root^e for e < n, built by repeated multiplication.
std::vector<std::uint64_t> power_table(std::uint64_t root, std::size_t n, const Modulus& mod) {
  std::vector<std::uint64_t> out(n);
  std::uint64_t x = 1;
  for (auto& p : out) {
    p = x;
    x = mod.mul(x, root);
  }
  return out;
}

}  // namespace

TwiddleTable precompute_tables(const ZqContext& ctx) {
  require_power_of_two(ctx);
  TwiddleTable t;
  t.kind_ = RootKind::Psi;
  t.q_ = ctx.q();
  t.n_inv_ = ctx.n_inv();
  t.fwd_.assign(ctx.n(), 1);
  t.inv_.assign(ctx.n(), 1);
  const auto up = power_table(ctx.psi(), ctx.n(), ctx.modulus());
  const auto down = power_table(ctx.psi_inv(), ctx.n(), ctx.modulus());
  for (std::size_t k = 1; k < ctx.n(); ++k) {
    t.fwd_[k] = up[t.exponent(k)];
    t.inv_[k] = down[t.exponent(k)];
  }
  return t;
}

TwiddleTable precompute_cyclic_tables(const ZqContext& ctx) {
  require_power_of_two(ctx);
  TwiddleTable t;
  t.kind_ = RootKind::Omega;
  t.q_ = ctx.q();
  t.n_inv_ = ctx.n_inv();
  t.fwd_.assign(ctx.n(), 1);
  t.inv_.assign(ctx.n(), 1);
  const auto up = power_table(ctx.omega(), ctx.n(), ctx.modulus());
  const auto down = power_table(ctx.omega_inv(), ctx.n(), ctx.modulus());
  for (std::size_t k = 1; k < ctx.n(); ++k) {
    t.fwd_[k] = up[t.exponent(k)];
    t.inv_[k] = down[t.exponent(k)];
  }
  return t;
}

std::uint64_t forward_inplace(std::span<std::uint64_t> a, const TwiddleTable& table,
                              const Modulus& mod) {
  const std::size_t n = a.size();
  if (n != table.n()) throw Error(ErrorCode::LengthMismatch, "buffer length differs from table");
  const auto fwd = table.fwd();
  std::uint64_t butterflies = 0;
  for (std::size_t len = n / 2, m = 1; len >= 1; len >>= 1, m <<= 1) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::uint64_t zeta = fwd[m + b];
      const std::size_t start = 2 * b * len;
      for (std::size_t j = start; j < start + len; ++j) {
        const std::uint64_t t = mod.mul(zeta, a[j + len]);
        a[j + len] = mod.sub(a[j], t);
        a[j] = mod.add(a[j], t);
      }
      butterflies += len;
    }
  }
  return butterflies;
}

std::uint64_t inverse_inplace(std::span<std::uint64_t> a, const TwiddleTable& table,
                              const Modulus& mod) {
  const std::size_t n = a.size();
  if (n != table.n()) throw Error(ErrorCode::LengthMismatch, "buffer length differs from table");
  const auto inv = table.inv();
  std::uint64_t butterflies = 0;
  for (std::size_t len = 1, m = n / 2; len < n; len <<= 1, m >>= 1) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::uint64_t zeta_inv = inv[m + b];
      const std::size_t start = 2 * b * len;
      for (std::size_t j = start; j < start + len; ++j) {
        const std::uint64_t u = a[j];
        const std::uint64_t v = a[j + len];
        a[j] = mod.add(u, v);
        a[j + len] = mod.mul(mod.sub(u, v), zeta_inv);
      }
      butterflies += len;
    }
  }
  const std::uint64_t n_inv = table.n_inv();
  for (auto& x : a) x = mod.mul(x, n_inv);
  return butterflies;
}

namespace {

void check_table(const TwiddleTable& table, const ZqContext& ctx, RootKind kind) {
  require_power_of_two(ctx);
  if (table.kind() != kind) throw Error(ErrorCode::FlavorMismatch, "twiddle table has the wrong root kind");
  if (table.q() != ctx.q() || table.n() != ctx.n()) {
    throw Error(ErrorCode::ContextMismatch, "twiddle table built for another context");
  }
}

NttVector forward(const Polynomial& v, const TwiddleTable& table, const ZqContext& ctx,
                  RootKind kind, TransformStats* stats) {
  check_table(table, ctx, kind);
  if (v.q() != ctx.q()) throw Error(ErrorCode::ModulusMismatch, "polynomial modulus differs from context");
  if (v.size() != ctx.n()) throw Error(ErrorCode::LengthMismatch, "polynomial length differs from n");
  std::vector<std::uint64_t> a(v.coeffs().begin(), v.coeffs().end());
  const auto count = forward_inplace(a, table, ctx.modulus());
  if (stats) stats->butterflies += count;
  return NttVector(std::move(a), kind, Ordering::BitReversed, ctx);
}

Polynomial inverse(const NttVector& vhat, const TwiddleTable& table, const ZqContext& ctx,
                   RootKind kind, TransformStats* stats) {
  check_table(table, ctx, kind);
  if (vhat.kind() != kind) throw Error(ErrorCode::FlavorMismatch, "spectrum has the wrong root kind");
  if (vhat.ordering() != Ordering::BitReversed) {
    throw Error(ErrorCode::OrderingMismatch, "fast inverse expects bit-reversed input");
  }
  if (vhat.context() != ctx) throw Error(ErrorCode::ContextMismatch, "spectrum belongs to another context");
  std::vector<std::uint64_t> a(vhat.values().begin(), vhat.values().end());
  const auto count = inverse_inplace(a, table, ctx.modulus());
  if (stats) stats->butterflies += count;
  return Polynomial(std::move(a), ctx.q());
}

}  // namespace

NttVector ntt_ct(const Polynomial& v, const TwiddleTable& table, const ZqContext& ctx,
                 TransformStats* stats) {
  (void)ctx.psi();  // MissingPsi on cyclic contexts
  return forward(v, table, ctx, RootKind::Psi, stats);
}

Polynomial intt_gs(const NttVector& vhat, const TwiddleTable& table, const ZqContext& ctx,
                   TransformStats* stats) {
  (void)ctx.psi();
  return inverse(vhat, table, ctx, RootKind::Psi, stats);
}

NttVector ntt_ct_cyclic(const Polynomial& v, const TwiddleTable& table, const ZqContext& ctx,
                        TransformStats* stats) {
  return forward(v, table, ctx, RootKind::Omega, stats);
}

Polynomial intt_gs_cyclic(const NttVector& vhat, const TwiddleTable& table, const ZqContext& ctx,
                          TransformStats* stats) {
  return inverse(vhat, table, ctx, RootKind::Omega, stats);
}

}  // namespace nttlab
