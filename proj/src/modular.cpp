#include "nttlab/modular.hpp"

#include <array>
#include <limits>
#include <string>

namespace nttlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::FactorTooLarge: return "FactorTooLarge";
    case ErrorCode::NotFriendly: return "NotFriendly";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::OrderingMismatch: return "OrderingMismatch";
    case ErrorCode::MissingPsi: return "MissingPsi";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
  }
  return "Unknown";
}

Modulus::Modulus(std::uint64_t q) : q_(q), ratio_(0) {
  if (q < 2 || q >= kLimit) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus " + std::to_string(q) + " outside [2, 2^31)");
  }
  ratio_ = std::numeric_limits<std::uint64_t>::max() / q;
}

std::uint64_t Modulus::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1;
  base = reduce(base);
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t Modulus::inv(std::uint64_t a) const {
  // Extended Euclid on signed values; |coefficients| stay below q.
  std::int64_t r0 = static_cast<std::int64_t>(q_);
  std::int64_t r1 = static_cast<std::int64_t>(reduce(a));
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw Error(ErrorCode::NotInvertible,
                std::to_string(a) + " has no inverse mod " + std::to_string(q_));
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(q_);
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept {
  return q.add(a, b);
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept {
  return q.sub(a, b);
}
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, const Modulus& q) noexcept {
  return q.mul(a, b);
}
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, const Modulus& q) noexcept {
  return q.pow(base, exp);
}
std::uint64_t mod_inv(std::uint64_t a, const Modulus& q) { return q.inv(a); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t Factorization::product() const {
  std::uint64_t p = 1;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) p *= f.prime;
  return p;
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128_t>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint64_t kTrialLimit = std::uint64_t{1} << 21;

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod64(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m < 2 || m >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::InvalidArgument,
                "factorize expects 2 <= m < 2^62, got " + std::to_string(m));
  }
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) out.factors.push_back({p, k});
  };
  take(2);
  for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= m; p += 2) take(p);
  if (m > 1) {
    // Whatever survives has no factor <= min(2^21, sqrt(m)).
    const bool below_reach = m < kTrialLimit * kTrialLimit;
    if (!below_reach && !is_prime(m)) {
      throw Error(ErrorCode::FactorTooLarge,
                  "composite cofactor " + std::to_string(m) + " beyond trial division");
    }
    out.factors.push_back({m, 1});
  }
  return out;
}

}  // namespace nttlab
