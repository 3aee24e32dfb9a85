#pragma once

#include "nttlab/ntt_vector.hpp"
#include "nttlab/polynomial.hpp"

namespace nttlab {

// Direct O(n^2) transforms, evaluated straight from their defining sums.
// They accept any n the context supports (power of two or not).

/// vhat_j = sum_i omega^(ij) v_i.
NttVector ntt_naive(const Polynomial& v, const ZqContext& ctx);

/// v_i = n^-1 sum_j omega^(-ij) vhat_j.
Polynomial intt_naive(const NttVector& vhat, const ZqContext& ctx);

/// vhat_j = sum_i psi^(2ij + i) v_i, i.e. v evaluated at psi^(2j+1).
NttVector ntt_psi_naive(const Polynomial& v, const ZqContext& ctx);

/// v_i = n^-1 sum_j psi^(-(2ij + j)) vhat_j.
Polynomial intt_psi_naive(const NttVector& vhat, const ZqContext& ctx);

}  // namespace nttlab
