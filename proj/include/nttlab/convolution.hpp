#pragma once

#include "nttlab/params.hpp"
#include "nttlab/polynomial.hpp"

namespace nttlab {

// Schoolbook O(n^2) convolutions. These are the ground truth every
// transform-based product is checked against, so they use plain `%`
// reduction and no shared code with the transform kernels.

/// Y_k = sum_{i+j=k} g_i h_j, length n_g + n_h - 1.
Polynomial linear_convolution(const Polynomial& g, const Polynomial& h);

/// c_k = sum_{i<=k} g_i h_{k-i} + sum_{i>k} g_i h_{k+n-i}  (product mod x^n - 1).
Polynomial cyclic_convolution(const Polynomial& g, const Polynomial& h);

/// Linear product reduced mod x^n + 1: c_k = Y_k - Y_{k+n}.
Polynomial negacyclic_convolution(const Polynomial& g, const Polynomial& h);

/// Remainder of y modulo x^n - 1 (Cyclic) or x^n + 1 (Negacyclic), length n.
Polynomial wrap_reduce(const Polynomial& y, std::size_t n, Flavor flavor);

}  // namespace nttlab
