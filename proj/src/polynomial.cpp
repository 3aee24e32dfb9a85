#include "nttlab/polynomial.hpp"

#include <string>

namespace nttlab {

Polynomial::Polynomial(std::vector<std::uint64_t> coeffs, std::uint64_t q)
    : coeffs_(std::move(coeffs)), q_(q) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial must have length >= 1");
  if (q < 2) throw Error(ErrorCode::InvalidModulus, "modulus must be >= 2");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] >= q) {
      throw Error(ErrorCode::InvalidArgument, "coefficient " + std::to_string(i) + " = " +
                                                  std::to_string(coeffs_[i]) + " not below q=" +
                                                  std::to_string(q));
    }
  }
}

Polynomial Polynomial::from_integers(std::span<const std::int64_t> values, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  const auto sq = static_cast<std::int64_t>(q);
  for (auto v : values) {
    std::int64_t r = v % sq;
    if (r < 0) r += sq;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return Polynomial(std::move(out), q);
}

Polynomial Polynomial::zero(std::size_t n, std::uint64_t q) {
  return Polynomial(std::vector<std::uint64_t>(n, 0), q);
}

Polynomial Polynomial::monomial(std::size_t n, std::size_t k, std::uint64_t q) {
  std::vector<std::uint64_t> c(n, 0);
  c.at(k) = 1;
  return Polynomial(std::move(c), q);
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  if (a.q() != b.q()) throw Error(ErrorCode::ModulusMismatch, "add: moduli differ");
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "add: lengths differ");
  const Modulus mod(a.q());
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod.add(a[i], b[i]);
  return Polynomial(std::move(out), a.q());
}

Polynomial scale(const Polynomial& a, std::uint64_t scalar) {
  const Modulus mod(a.q());
  const std::uint64_t s = mod.reduce(scalar);
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod.mul(a[i], s);
  return Polynomial(std::move(out), a.q());
}

}  // namespace nttlab
