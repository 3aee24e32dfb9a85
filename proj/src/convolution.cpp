#include "nttlab/convolution.hpp"

namespace nttlab {
namespace {

void check_pair(const Polynomial& g, const Polynomial& h, bool same_length) {
  if (g.q() != h.q()) throw Error(ErrorCode::ModulusMismatch, "operands use different moduli");
  if (same_length && g.size() != h.size()) {
    throw Error(ErrorCode::LengthMismatch, "wrapped convolution needs equal lengths");
  }
}

}  // namespace

Polynomial linear_convolution(const Polynomial& g, const Polynomial& h) {
  check_pair(g, h, false);
  const std::uint64_t q = g.q();
  std::vector<std::uint64_t> y(g.size() + h.size() - 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) y[i + j] = (y[i + j] + g[i] * h[j] % q) % q;
  return Polynomial(std::move(y), q);
}

Polynomial cyclic_convolution(const Polynomial& g, const Polynomial& h) {
  check_pair(g, h, true);
  const std::uint64_t q = g.q();
  const std::size_t n = g.size();
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc = (acc + g[i] * h[k - i] % q) % q;
    for (std::size_t i = k + 1; i < n; ++i) acc = (acc + g[i] * h[k + n - i] % q) % q;
    c[k] = acc;
  }
  return Polynomial(std::move(c), q);
}

Polynomial negacyclic_convolution(const Polynomial& g, const Polynomial& h) {
  check_pair(g, h, true);
  return wrap_reduce(linear_convolution(g, h), g.size(), Flavor::Negacyclic);
}

Polynomial wrap_reduce(const Polynomial& y, std::size_t n, Flavor flavor) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "wrap length must be >= 1");
  const std::uint64_t q = y.q();
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    // x^k = x^(k mod n) * (x^n)^(k / n), and x^n = +1 or -1.
    const bool negate = flavor == Flavor::Negacyclic && (k / n) % 2 == 1;
    const std::uint64_t term = negate ? (q - y[k]) % q : y[k];
    c[k % n] = (c[k % n] + term) % q;
  }
  return Polynomial(std::move(c), q);
}

}  // namespace nttlab
