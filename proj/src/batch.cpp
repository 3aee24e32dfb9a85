#include "nttlab/batch.hpp"

#include <optional>

#include "parallel.hpp"

namespace nttlab {
namespace {

std::optional<TwiddleTable> table_for(const ZqContext& ctx, Flavor flavor, Impl impl) {
  if (impl == Impl::Naive) return std::nullopt;
  return flavor == Flavor::Negacyclic ? precompute_tables(ctx) : precompute_cyclic_tables(ctx);
}

RootKind root_kind(Flavor flavor) {
  return flavor == Flavor::Negacyclic ? RootKind::Psi : RootKind::Omega;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> forward_batch(std::span<const Polynomial> inputs,
                                                      const ZqContext& ctx, Flavor flavor,
                                                      Impl impl, Execution exec) {
  const auto table = table_for(ctx, flavor, impl);
  std::vector<std::vector<std::uint64_t>> out(inputs.size());
  detail::for_each_index(inputs.size(), exec, [&](std::size_t i) {
    if (!table) {
      out[i] = (flavor == Flavor::Negacyclic ? ntt_psi_naive(inputs[i], ctx) : ntt_naive(inputs[i], ctx))
                   .take();
      return;
    }
    auto spectrum = flavor == Flavor::Negacyclic ? ntt_ct(inputs[i], *table, ctx)
                                                 : ntt_ct_cyclic(inputs[i], *table, ctx);
    out[i] = std::move(spectrum).take();
    bitrev_permute_inplace(out[i]);
  });
  return out;
}

std::vector<Polynomial> inverse_batch(std::span<const std::vector<std::uint64_t>> spectra,
                                      const ZqContext& ctx, Flavor flavor, Impl impl,
                                      Execution exec) {
  const auto table = table_for(ctx, flavor, impl);
  const RootKind kind = root_kind(flavor);
  std::vector<Polynomial> out(spectra.size(), Polynomial::zero(ctx.n(), ctx.q()));
  detail::for_each_index(spectra.size(), exec, [&](std::size_t i) {
    if (!table) {
      NttVector v(spectra[i], kind, Ordering::Normal, ctx);
      out[i] = flavor == Flavor::Negacyclic ? intt_psi_naive(v, ctx) : intt_naive(v, ctx);
      return;
    }
    NttVector v(bitrev_permute(spectra[i]), kind, Ordering::BitReversed, ctx);
    out[i] = flavor == Flavor::Negacyclic ? intt_gs(v, *table, ctx) : intt_gs_cyclic(v, *table, ctx);
  });
  return out;
}

std::vector<Polynomial> multiply_batch(std::span<const Polynomial> us,
                                       std::span<const Polynomial> vs, const ZqContext& ctx,
                                       Flavor flavor, Execution exec) {
  if (us.size() != vs.size()) throw Error(ErrorCode::LengthMismatch, "batches differ in size");
  const auto table = table_for(ctx, flavor, is_power_of_two(ctx.n()) ? Impl::Fast : Impl::Naive);
  std::vector<Polynomial> out(us.size(), Polynomial::zero(ctx.n(), ctx.q()));
  detail::for_each_index(us.size(), exec, [&](std::size_t i) {
    if (flavor == Flavor::Negacyclic) {
      out[i] = table ? mul_negacyclic(us[i], vs[i], ctx, *table)
                     : mul_negacyclic(us[i], vs[i], ctx, MulPath::Naive);
    } else {
      out[i] = table ? mul_cyclic(us[i], vs[i], ctx, *table)
                     : mul_cyclic(us[i], vs[i], ctx, MulPath::Naive);
    }
  });
  return out;
}

}  // namespace nttlab
