#include "nttlab/ntt_reference.hpp"

#include <string>

namespace nttlab {

NttVector::NttVector(std::vector<std::uint64_t> values, RootKind kind, Ordering ordering,
                     ZqContext ctx)
    : values_(std::move(values)), kind_(kind), ordering_(ordering), ctx_(std::move(ctx)) {
  if (values_.size() != ctx_.n()) {
    throw Error(ErrorCode::LengthMismatch, "transform vector length " +
                                               std::to_string(values_.size()) + " != n=" +
                                               std::to_string(ctx_.n()));
  }
  for (auto v : values_)
    if (v >= ctx_.q()) throw Error(ErrorCode::InvalidArgument, "transform value not below q");
}

namespace {

void check_input(const Polynomial& v, const ZqContext& ctx) {
  if (v.q() != ctx.q()) throw Error(ErrorCode::ModulusMismatch, "polynomial modulus differs from context");
  if (v.size() != ctx.n()) {
    throw Error(ErrorCode::LengthMismatch,
                "length " + std::to_string(v.size()) + " != n=" + std::to_string(ctx.n()));
  }
}

void check_spectrum(const NttVector& vhat, const ZqContext& ctx, RootKind kind) {
  if (vhat.kind() != kind) throw Error(ErrorCode::FlavorMismatch, "transform vector has the wrong root kind");
  if (vhat.ordering() != Ordering::Normal) {
    throw Error(ErrorCode::OrderingMismatch, "reference inverse expects normal order");
  }
  if (vhat.context() != ctx) throw Error(ErrorCode::ContextMismatch, "vector belongs to another context");
}

std::vector<std::uint64_t> powers(std::uint64_t base, std::size_t count, const Modulus& mod) {
  std::vector<std::uint64_t> out(count);
  std::uint64_t x = 1;
  for (auto& p : out) {
    p = x;
    x = mod.mul(x, base);
  }
  return out;
}

}  // namespace

NttVector ntt_naive(const Polynomial& v, const ZqContext& ctx) {
  check_input(v, ctx);
  const Modulus& mod = ctx.modulus();
  const std::size_t n = ctx.n();
  const auto w = powers(ctx.omega(), n, mod);
  std::vector<std::uint64_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = mod.add(acc, mod.mul(w[(i * j) % n], v[i]));
    out[j] = acc;
  }
  return NttVector(std::move(out), RootKind::Omega, Ordering::Normal, ctx);
}

Polynomial intt_naive(const NttVector& vhat, const ZqContext& ctx) {
  check_spectrum(vhat, ctx, RootKind::Omega);
  const Modulus& mod = ctx.modulus();
  const std::size_t n = ctx.n();
  const auto w = powers(ctx.omega_inv(), n, mod);
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc = mod.add(acc, mod.mul(w[(i * j) % n], vhat[j]));
    out[i] = mod.mul(acc, ctx.n_inv());
  }
  return Polynomial(std::move(out), ctx.q());
}

NttVector ntt_psi_naive(const Polynomial& v, const ZqContext& ctx) {
  const std::uint64_t psi = ctx.psi();
  check_input(v, ctx);
  const Modulus& mod = ctx.modulus();
  const std::size_t n = ctx.n();
  const std::size_t two_n = 2 * n;
  const auto p = powers(psi, two_n, mod);
  std::vector<std::uint64_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      acc = mod.add(acc, mod.mul(p[(2 * i * j + i) % two_n], v[i]));
    out[j] = acc;
  }
  return NttVector(std::move(out), RootKind::Psi, Ordering::Normal, ctx);
}

Polynomial intt_psi_naive(const NttVector& vhat, const ZqContext& ctx) {
  const std::uint64_t psi_inv = ctx.psi_inv();
  check_spectrum(vhat, ctx, RootKind::Psi);
  const Modulus& mod = ctx.modulus();
  const std::size_t n = ctx.n();
  const std::size_t two_n = 2 * n;
  const auto p = powers(psi_inv, two_n, mod);
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      acc = mod.add(acc, mod.mul(p[(2 * i * j + i) % two_n], vhat[j]));
    out[i] = mod.mul(acc, ctx.n_inv());
  }
  return Polynomial(std::move(out), ctx.q());
}

}  // namespace nttlab
