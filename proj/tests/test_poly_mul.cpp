#include <doctest.h>

#include <random>

#include "nttlab/convolution.hpp"
#include "nttlab/poly_mul.hpp"
#include "oracles.hpp"

using namespace nttlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected nttlab::Error");
  return ErrorCode::InvalidArgument;
}

NttMatrix random_matrix(std::mt19937_64& rng, std::size_t k, std::size_t l, const ZqContext& ctx) {
  NttMatrix a(k);
  for (auto& row : a)
    for (std::size_t j = 0; j < l; ++j)
      row.push_back(NttDomainPoly::from_values(oracle::random_vec(rng, ctx.n(), ctx.q()), ctx));
  return a;
}

// Time-domain polynomial behind a bit-reversed Psi spectrum, via the naive inverse.
Polynomial time_domain(const NttDomainPoly& p) {
  const auto& ctx = p.context();
  const auto& s = p.spectrum();
  NttVector normal(bitrev_permute(s.values()), RootKind::Psi, Ordering::Normal, ctx);
  return intt_psi_naive(normal, ctx);
}

}  // namespace

TEST_CASE("pointwise operations") {
  const auto ctx = make_context(7681, 4, Flavor::Negacyclic);
  const NttVector a({1, 2, 3, 7680}, RootKind::Psi, Ordering::Normal, ctx);
  const NttVector one({1, 1, 1, 1}, RootKind::Psi, Ordering::Normal, ctx);
  const NttVector zero({0, 0, 0, 0}, RootKind::Psi, Ordering::Normal, ctx);
  CHECK(pointwise_mul(a, one) == a);
  CHECK(pointwise_mul(a, zero) == zero);
  CHECK(pointwise_add(a, one).values()[3] == 0);

  const NttVector bo({1, 1, 1, 1}, RootKind::Psi, Ordering::BitReversed, ctx);
  const NttVector om({1, 1, 1, 1}, RootKind::Omega, Ordering::Normal, ctx);
  const NttVector other({1, 1, 1, 1}, RootKind::Psi, Ordering::Normal, make_context(7681, 4, Flavor::Cyclic));
  CHECK(code_of([&] { (void)pointwise_mul(a, bo); }) == ErrorCode::OrderingMismatch);
  CHECK(code_of([&] { (void)pointwise_mul(a, om); }) == ErrorCode::FlavorMismatch);
  CHECK(code_of([&] { (void)pointwise_mul(a, other); }) == ErrorCode::ContextMismatch);
}

TEST_CASE("mul examples at q = 7681") {
  const auto ctx = make_context(7681, 4, Flavor::Negacyclic);
  const Polynomial u({1, 2, 3, 4}, 7681), v({5, 6, 7, 8}, 7681);
  for (auto path : {MulPath::Auto, MulPath::Naive, MulPath::Fast}) {
    CHECK(mul_negacyclic(u, v, ctx, path) == Polynomial({7625, 7645, 2, 60}, 7681));
    CHECK(mul_cyclic(u, v, ctx, path) == Polynomial({66, 68, 66, 60}, 7681));
  }
  const auto one = Polynomial::monomial(4, 0, 7681);
  CHECK(mul_negacyclic(u, one, ctx) == u);
  CHECK(mul_cyclic(u, one, ctx) == u);
}

TEST_CASE("both paths agree with the oracle") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {7681ull, 8380417ull}) {
    for (std::uint64_t n = 2; n <= 256; n *= 2) {
      const auto ctx = make_context(q, n, Flavor::Negacyclic);
      for (int t = 0; t < 4; ++t) {
        const auto u = oracle::random_poly(rng, n, q);
        const auto v = oracle::random_poly(rng, n, q);
        const auto nega = negacyclic_convolution(u, v);
        const auto cyc = cyclic_convolution(u, v);
        REQUIRE(mul_negacyclic(u, v, ctx, MulPath::Fast) == nega);
        REQUIRE(mul_negacyclic(u, v, ctx, MulPath::Naive) == nega);
        REQUIRE(mul_cyclic(u, v, ctx, MulPath::Fast) == cyc);
        REQUIRE(mul_cyclic(u, v, ctx, MulPath::Naive) == cyc);
      }
    }
  }
  // Non-power-of-two n goes through the naive path under Auto.
  const auto ctx = make_context(7681, 3, Flavor::Negacyclic);
  const auto u = oracle::random_poly(rng, 3, 7681);
  const auto v = oracle::random_poly(rng, 3, 7681);
  CHECK(mul_negacyclic(u, v, ctx) == negacyclic_convolution(u, v));
  CHECK(mul_cyclic(u, v, ctx) == cyclic_convolution(u, v));
  CHECK(code_of([&] { (void)mul_negacyclic(u, v, ctx, MulPath::Fast); }) == ErrorCode::NotPowerOfTwo);
}

TEST_CASE("mul errors") {
  const auto pwc = make_context(7681, 4, Flavor::Cyclic);
  const Polynomial u({1, 2, 3, 4}, 7681);
  CHECK(code_of([&] { (void)mul_negacyclic(u, u, pwc); }) == ErrorCode::MissingPsi);
  CHECK(code_of([&] { (void)mul_cyclic(u, Polynomial({1, 2}, 7681), pwc); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { (void)mul_cyclic(u, Polynomial({1, 2, 3, 4}, 17), pwc); }) == ErrorCode::ModulusMismatch);
}

TEST_CASE("sum_of_products") {
  std::mt19937_64 rng(8);
  const auto ctx = make_context(8380417, 256, Flavor::Negacyclic);
  for (std::size_t t : {1u, 2u, 5u}) {
    std::vector<Polynomial> fs, gs;
    for (std::size_t i = 0; i < t; ++i) {
      fs.push_back(oracle::random_poly(rng, 256, ctx.q()));
      gs.push_back(oracle::random_poly(rng, 256, ctx.q()));
    }
    TransformLedger ledger;
    const auto got = sum_of_products(fs, gs, ctx, ledger);
    auto expected = negacyclic_convolution(fs[0], gs[0]);
    for (std::size_t i = 1; i < t; ++i) expected = add(expected, negacyclic_convolution(fs[i], gs[i]));
    CHECK(got == expected);
    CHECK(ledger.ntt_count == 2 * t);
    CHECK(ledger.intt_count == 1);
    CHECK(ledger.pointwise_mul_count == t);
  }

  // Naive path for a non-power-of-two length.
  const auto ctx3 = make_context(7681, 3, Flavor::Negacyclic);
  std::vector<Polynomial> fs{oracle::random_poly(rng, 3, 7681), oracle::random_poly(rng, 3, 7681)};
  std::vector<Polynomial> gs{oracle::random_poly(rng, 3, 7681), oracle::random_poly(rng, 3, 7681)};
  TransformLedger ledger;
  CHECK(sum_of_products(fs, gs, ctx3, ledger) ==
        add(negacyclic_convolution(fs[0], gs[0]), negacyclic_convolution(fs[1], gs[1])));

  CHECK(code_of([&] { (void)sum_of_products({}, {}, ctx3, ledger); }) == ErrorCode::EmptyList);
  CHECK(code_of([&] { (void)sum_of_products(fs, std::span(gs).first(1), ctx3, ledger); }) ==
        ErrorCode::LengthMismatch);
}

TEST_CASE("ledger baseline") {
  CHECK(per_product_baseline(6, 5) == TransformLedger{60, 30, 30});
  CHECK(per_product_baseline(6, 5).transforms() == 90);
  CHECK(per_product_baseline(1, 1).transforms() == 3);
}

TEST_CASE("matvec_ntt") {
  std::mt19937_64 rng(9);
  for (auto [q, n] : {std::pair<std::uint64_t, std::size_t>{7681, 4}, {8380417, 256}}) {
    const auto ctx = make_context(q, n, Flavor::Negacyclic);
    for (auto [k, l] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {6, 5}}) {
      const auto a = random_matrix(rng, k, l, ctx);
      std::vector<Polynomial> s;
      for (std::size_t j = 0; j < l; ++j) s.push_back(oracle::random_poly(rng, n, q));

      TransformLedger ledger, serial_ledger;
      const auto t = matvec_ntt(a, s, ledger);
      const auto t_serial = matvec_ntt(a, s, serial_ledger, Execution::Serial);
      CHECK(t == t_serial);
      CHECK(ledger == serial_ledger);
      CHECK(ledger.ntt_count == l);
      CHECK(ledger.intt_count == k);
      CHECK(ledger.pointwise_mul_count == k * l);

      for (std::size_t i = 0; i < k; ++i) {
        auto expected = Polynomial::zero(n, q);
        for (std::size_t j = 0; j < l; ++j)
          expected = add(expected, negacyclic_convolution(time_domain(a[i][j]), s[j]));
        REQUIRE(t[i] == expected);
      }
    }
  }
}

TEST_CASE("matvec_ntt errors") {
  std::mt19937_64 rng(10);
  const auto ctx = make_context(7681, 4, Flavor::Negacyclic);
  const auto a = random_matrix(rng, 2, 2, ctx);
  std::vector<Polynomial> s{oracle::random_poly(rng, 4, 7681)};
  TransformLedger ledger;
  CHECK(code_of([&] { (void)matvec_ntt(a, s, ledger); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { (void)matvec_ntt(NttMatrix{}, s, ledger); }) == ErrorCode::DimensionMismatch);

  auto mixed = a;
  mixed[1][1] = NttDomainPoly::from_values({1, 2, 3, 4}, make_context(7681, 4, Flavor::Negacyclic));
  CHECK_NOTHROW((void)matvec_ntt(mixed, std::vector<Polynomial>(2, Polynomial::zero(4, 7681)), ledger));
  mixed[1][1] = NttDomainPoly::from_values({1, 2, 3, 4, 5, 6, 7, 8}, make_context(7681, 8, Flavor::Negacyclic));
  CHECK(code_of([&] { (void)matvec_ntt(mixed, std::vector<Polynomial>(2, Polynomial::zero(4, 7681)), ledger); }) ==
        ErrorCode::ContextMismatch);

  const NttVector normal({1, 2, 3, 4}, RootKind::Psi, Ordering::Normal, ctx);
  CHECK(code_of([&] { (void)NttDomainPoly(normal); }) == ErrorCode::OrderingMismatch);
}

TEST_CASE("CRT factorization of x^n + 1") {
  CHECK(verify_crt_factorization(make_context(7681, 4, Flavor::Negacyclic), 64));
  CHECK(crt_product_matches(17, 4, 2));
  CHECK(crt_product_matches(7681, 1, 7680));
  CHECK_FALSE(crt_product_matches(7681, 4, 3383));  // omega is not a 2n-th root
  CHECK_FALSE(crt_product_matches(17, 4, 4));
  for (std::uint64_t q : {17ull, 7681ull, 8380417ull}) {
    for (std::uint64_t n = 2; n <= 64; ++n) {
      if (!is_nwc_friendly(q, n)) continue;
      REQUIRE(verify_crt_factorization(make_context(q, n, Flavor::Negacyclic), 64));
    }
  }
  CHECK(code_of([] { (void)verify_crt_factorization(make_context(7681, 128, Flavor::Negacyclic), 64); }) ==
        ErrorCode::InvalidArgument);
}
