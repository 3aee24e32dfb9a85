#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nttlab/poly_mul.hpp"

namespace nttlab {

// Batch kernels: the same operation over many independent polynomials.
// Each entry is computed by the single-polynomial routines; Execution::Parallel
// spreads entries over an OpenMP team, Execution::Serial is the reference
// path the parallel one is tested against. Outputs are identical either way.

enum class Impl { Naive, Fast };

/// Forward transforms of every input, returned in normal order regardless of
/// impl (the fast path's bit-reversed output is permuted back).
std::vector<std::vector<std::uint64_t>> forward_batch(std::span<const Polynomial> inputs,
                                                      const ZqContext& ctx, Flavor flavor,
                                                      Impl impl, Execution exec);

/// Inverse transforms of normal-order spectra.
std::vector<Polynomial> inverse_batch(std::span<const std::vector<std::uint64_t>> spectra,
                                      const ZqContext& ctx, Flavor flavor, Impl impl,
                                      Execution exec);

/// us[i] * vs[i] in the ring selected by flavor.
std::vector<Polynomial> multiply_batch(std::span<const Polynomial> us,
                                       std::span<const Polynomial> vs, const ZqContext& ctx,
                                       Flavor flavor, Execution exec);

}  // namespace nttlab
