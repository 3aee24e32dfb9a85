#include "nttlab/params.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace nttlab {
namespace {

void check_query(std::uint64_t q, std::uint64_t n) {
  if (q < 3) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 3");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "length must be >= 1");
}

bool divides_unit_group_gcd(std::uint64_t q, std::uint64_t d) {
  std::uint64_t g = 0;
  for (const auto& f : factorize(q).factors) g = gcd(g, f.prime - 1);
  return g != 0 && g % d == 0;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  if (m < 2) return out;
  for (const auto& f : factorize(m).factors) out.push_back(f.prime);
  return out;
}

/// One prime-power component p^m of q together with the roots of the
/// requested order that live in it.
struct Component {
  std::uint64_t prime;
  std::uint64_t modulus;  // p^m
  std::vector<std::uint64_t> roots;
};

std::uint64_t find_generator(std::uint64_t p) {
  const Modulus mod(p);
  const auto primes = distinct_primes(p - 1);
  for (std::uint64_t c = 2; c < p; ++c) {
    const bool generates = std::all_of(primes.begin(), primes.end(),
                                       [&](std::uint64_t r) { return mod.pow(c, (p - 1) / r) != 1; });
    if (generates) return c;
  }
  return 1;  // p == 2: the unit group is trivial
}

/// All elements of exact order d in the cyclic group Z_{p^m}^*, where d | p - 1.
/// An order-d element mod p lifts to one mod p^m by raising it to p^(m-1).
std::vector<std::uint64_t> roots_of_order(const PrimePower& pp, std::uint64_t d) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < pp.multiplicity; ++i) pm *= pp.prime;
  const Modulus mod_p(pp.prime);
  const Modulus mod_pm(pm);
  const std::uint64_t g = find_generator(pp.prime);
  std::uint64_t h = mod_p.pow(g, (pp.prime - 1) / d);
  h = mod_pm.pow(h, pm / pp.prime);

  if (d == 1) return {1};
  std::vector<std::uint64_t> out;
  std::uint64_t x = 1;
  for (std::uint64_t j = 1; j < d; ++j) {
    x = mod_pm.mul(x, h);
    if (gcd(j, d) == 1) out.push_back(x);
  }
  return out;
}

/// x is a principal d-th root of unity: x^d = 1 and x^(d/r) - 1 is a unit for
/// every prime r | d. For prime q this is exactly "order d".
bool is_principal_root(std::uint64_t x, std::uint64_t d, const Modulus& mod,
                       const std::vector<std::uint64_t>& primes_of_d) {
  if (mod.pow(x, d) != 1) return false;
  for (auto r : primes_of_d) {
    const std::uint64_t t = mod.pow(x, d / r);
    if (gcd(mod.sub(t, 1), mod.value()) != 1) return false;
  }
  return true;
}

constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 22;

/// Minimum over the CRT combinations of per-component candidate lists.
/// Falls back to an upward scan with `accept` when there are too many
/// combinations to enumerate.
template <class Accept>
std::uint64_t smallest_crt_combination(const Modulus& mod, const std::vector<Component>& comps,
                                       Accept accept) {
  const std::uint64_t q = mod.value();
  std::uint64_t combos = 1;
  for (const auto& c : comps) {
    if (c.roots.empty()) throw Error(ErrorCode::NoRoot, "component has no root of the requested order");
    combos = (combos > kEnumerationCap) ? combos : combos * c.roots.size();
  }

  if (combos > kEnumerationCap) {
    for (std::uint64_t x = 1; x < q; ++x)
      if (accept(x)) return x;
    throw Error(ErrorCode::NoRoot, "no root found by exhaustive scan");
  }

  std::vector<std::uint64_t> basis;
  for (const auto& c : comps) {
    const std::uint64_t rest = q / c.modulus;
    const std::uint64_t rest_inv = Modulus(c.modulus).inv(rest % c.modulus);
    basis.push_back(mod.mul(rest % q, rest_inv % q));
  }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> idx(comps.size(), 0);
  while (true) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
      x = mod.add(x, mod.mul(comps[i].roots[idx[i]], basis[i]));
    best = std::min(best, x);
    std::size_t i = 0;
    for (; i < comps.size(); ++i) {
      if (++idx[i] < comps[i].roots.size()) break;
      idx[i] = 0;
    }
    if (i == comps.size()) break;
  }
  return best;
}

std::vector<Component> components_with_roots(std::uint64_t q, std::uint64_t d) {
  std::vector<Component> comps;
  for (const auto& f : factorize(q).factors) {
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < f.multiplicity; ++i) pm *= f.prime;
    comps.push_back({f.prime, pm, roots_of_order(f, d)});
  }
  return comps;
}

}  // namespace

bool is_pwc_friendly(std::uint64_t q, std::uint64_t n) {
  check_query(q, n);
  return divides_unit_group_gcd(q, n);
}

bool is_nwc_friendly(std::uint64_t q, std::uint64_t n) {
  check_query(q, n);
  return divides_unit_group_gcd(q, 2 * n);
}

std::uint64_t find_omega(std::uint64_t q, std::uint64_t n) {
  check_query(q, n);
  if (n == 1) return 1;
  if (!is_pwc_friendly(q, n)) {
    throw Error(ErrorCode::NoRoot, "no primitive " + std::to_string(n) + "-th root of unity mod " +
                                       std::to_string(q));
  }
  const Modulus mod(q);
  const auto primes_n = distinct_primes(n);
  return smallest_crt_combination(mod, components_with_roots(q, n), [&](std::uint64_t x) {
    return is_principal_root(x, n, mod, primes_n);
  });
}

std::uint64_t find_psi(std::uint64_t q, std::uint64_t n) {
  check_query(q, n);
  if (!is_nwc_friendly(q, n)) {
    throw Error(ErrorCode::NoRoot, "no primitive " + std::to_string(2 * n) +
                                       "-th root of unity mod " + std::to_string(q));
  }
  const Modulus mod(q);
  const std::uint64_t omega = find_omega(q, n);
  auto comps = components_with_roots(q, 2 * n);
  for (auto& c : comps) {
    const Modulus mc(c.modulus);
    const std::uint64_t target = omega % c.modulus;
    std::erase_if(c.roots, [&](std::uint64_t x) {
      return mc.mul(x, x) != target || mc.pow(x, n) != c.modulus - 1;
    });
  }
  const auto primes_2n = distinct_primes(2 * n);
  return smallest_crt_combination(mod, comps, [&](std::uint64_t x) {
    return mod.mul(x, x) == omega && mod.pow(x, n) == q - 1 &&
           is_principal_root(x, 2 * n, mod, primes_2n);
  });
}

std::uint64_t ZqContext::psi() const {
  if (!psi_) throw Error(ErrorCode::MissingPsi, "cyclic context has no psi");
  return *psi_;
}

std::uint64_t ZqContext::psi_inv() const {
  if (!psi_inv_) throw Error(ErrorCode::MissingPsi, "cyclic context has no psi");
  return *psi_inv_;
}

ZqContext make_context(std::uint64_t q, std::uint64_t n, Flavor flavor) {
  if (q < 3 || q % 2 == 0 || q >= Modulus::kLimit) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be odd with 3 <= q < 2^31, got " + std::to_string(q));
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "length must be >= 2");

  const bool friendly = flavor == Flavor::Cyclic ? is_pwc_friendly(q, n) : is_nwc_friendly(q, n);
  if (!friendly) {
    throw Error(ErrorCode::NotFriendly,
                "q=" + std::to_string(q) + " is not " +
                    (flavor == Flavor::Cyclic ? "PWC" : "NWC") + "-friendly for n=" + std::to_string(n));
  }
  if (gcd(n, q) != 1) {
    throw Error(ErrorCode::NotInvertible, "n=" + std::to_string(n) + " shares a factor with q");
  }

  ZqContext ctx(Modulus(q), n, flavor);
  const Modulus& mod = ctx.modulus_;
  ctx.omega_ = find_omega(q, n);
  ctx.omega_inv_ = mod.inv(ctx.omega_);
  ctx.n_inv_ = mod.inv(n % q);
  if (flavor == Flavor::Negacyclic) {
    ctx.psi_ = find_psi(q, n);
    ctx.psi_inv_ = mod.inv(*ctx.psi_);
  }

  const auto primes_n = distinct_primes(n);
  bool ok = is_principal_root(ctx.omega_, n, mod, primes_n) &&
            mod.mul(ctx.omega_, ctx.omega_inv_) == 1 && mod.mul(n % q, ctx.n_inv_) == 1;
  if (ctx.psi_) {
    ok = ok && mod.mul(*ctx.psi_, *ctx.psi_) == ctx.omega_ && mod.pow(*ctx.psi_, n) == q - 1 &&
         mod.mul(*ctx.psi_, *ctx.psi_inv_) == 1;
  }
  if (!ok) throw Error(ErrorCode::NoRoot, "derived roots failed verification");
  return ctx;
}

}  // namespace nttlab
