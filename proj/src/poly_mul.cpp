#include "nttlab/poly_mul.hpp"

#include <string>

#include "parallel.hpp"

namespace nttlab {
namespace {

void check_operands(const NttVector& a, const NttVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "spectra differ in length");
  if (a.kind() != b.kind()) throw Error(ErrorCode::FlavorMismatch, "spectra differ in root kind");
  if (a.ordering() != b.ordering()) throw Error(ErrorCode::OrderingMismatch, "spectra differ in ordering");
  if (a.context() != b.context()) throw Error(ErrorCode::ContextMismatch, "spectra from different contexts");
}

void check_factors(const Polynomial& u, const Polynomial& v, const ZqContext& ctx) {
  if (u.q() != ctx.q() || v.q() != ctx.q()) {
    throw Error(ErrorCode::ModulusMismatch, "operand modulus differs from context");
  }
  if (u.size() != ctx.n() || v.size() != ctx.n()) {
    throw Error(ErrorCode::LengthMismatch, "operands must have length n=" + std::to_string(ctx.n()));
  }
}

bool use_fast(MulPath path, const ZqContext& ctx) {
  switch (path) {
    case MulPath::Naive: return false;
    case MulPath::Fast: return true;
    case MulPath::Auto: return is_power_of_two(ctx.n());
  }
  return false;
}

}  // namespace

NttVector pointwise_mul(const NttVector& a, const NttVector& b) {
  check_operands(a, b);
  const Modulus& mod = a.context().modulus();
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod.mul(a[i], b[i]);
  return NttVector(std::move(out), a.kind(), a.ordering(), a.context());
}

NttVector pointwise_add(const NttVector& a, const NttVector& b) {
  check_operands(a, b);
  const Modulus& mod = a.context().modulus();
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod.add(a[i], b[i]);
  return NttVector(std::move(out), a.kind(), a.ordering(), a.context());
}

Polynomial mul_cyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                      MulPath path) {
  check_factors(u, v, ctx);
  if (use_fast(path, ctx)) return mul_cyclic(u, v, ctx, precompute_cyclic_tables(ctx));
  return intt_naive(pointwise_mul(ntt_naive(u, ctx), ntt_naive(v, ctx)), ctx);
}

Polynomial mul_cyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                      const TwiddleTable& table) {
  check_factors(u, v, ctx);
  return intt_gs_cyclic(
      pointwise_mul(ntt_ct_cyclic(u, table, ctx), ntt_ct_cyclic(v, table, ctx)), table, ctx);
}

Polynomial mul_negacyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                          MulPath path) {
  (void)ctx.psi();
  check_factors(u, v, ctx);
  if (use_fast(path, ctx)) return mul_negacyclic(u, v, ctx, precompute_tables(ctx));
  return intt_psi_naive(pointwise_mul(ntt_psi_naive(u, ctx), ntt_psi_naive(v, ctx)), ctx);
}

Polynomial mul_negacyclic(const Polynomial& u, const Polynomial& v, const ZqContext& ctx,
                          const TwiddleTable& table) {
  check_factors(u, v, ctx);
  // Both spectra stay bit-reversed; the pointwise product does not care.
  return intt_gs(pointwise_mul(ntt_ct(u, table, ctx), ntt_ct(v, table, ctx)), table, ctx);
}

TransformLedger per_product_baseline(std::size_t k, std::size_t l) {
  const std::uint64_t products = static_cast<std::uint64_t>(k) * l;
  return TransformLedger{2 * products, products, products};
}

Polynomial sum_of_products(std::span<const Polynomial> fs, std::span<const Polynomial> gs,
                           const ZqContext& ctx, TransformLedger& ledger) {
  if (fs.empty() || gs.empty()) throw Error(ErrorCode::EmptyList, "sum of products needs t >= 1");
  if (fs.size() != gs.size()) throw Error(ErrorCode::LengthMismatch, "operand lists differ in length");
  (void)ctx.psi();
  for (std::size_t i = 0; i < fs.size(); ++i) check_factors(fs[i], gs[i], ctx);

  const bool fast = is_power_of_two(ctx.n());
  const TwiddleTable table = fast ? precompute_tables(ctx) : TwiddleTable{};
  auto forward = [&](const Polynomial& p) {
    ++ledger.ntt_count;
    return fast ? ntt_ct(p, table, ctx) : ntt_psi_naive(p, ctx);
  };

  NttVector acc = pointwise_mul(forward(fs[0]), forward(gs[0]));
  ++ledger.pointwise_mul_count;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = pointwise_add(acc, pointwise_mul(forward(fs[i]), forward(gs[i])));
    ++ledger.pointwise_mul_count;
  }
  ++ledger.intt_count;
  return fast ? intt_gs(acc, table, ctx) : intt_psi_naive(acc, ctx);
}

NttDomainPoly::NttDomainPoly(NttVector values) : values_(std::move(values)) {
  if (values_.kind() != RootKind::Psi) {
    throw Error(ErrorCode::FlavorMismatch, "transform-domain polynomial must be a Psi spectrum");
  }
  if (values_.ordering() != Ordering::BitReversed) {
    throw Error(ErrorCode::OrderingMismatch, "transform-domain polynomial must be bit-reversed");
  }
}

NttDomainPoly NttDomainPoly::from_values(std::vector<std::uint64_t> values, const ZqContext& ctx) {
  (void)ctx.psi();
  return NttDomainPoly(NttVector(std::move(values), RootKind::Psi, Ordering::BitReversed, ctx));
}

std::vector<Polynomial> matvec_ntt(const NttMatrix& a, std::span<const Polynomial> s,
                                   TransformLedger& ledger, Execution exec) {
  if (a.empty() || a.front().empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  const std::size_t k = a.size();
  const std::size_t l = a.front().size();
  if (s.size() != l) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(l) +
                                                  " columns, vector has " + std::to_string(s.size()));
  }
  const ZqContext& ctx = a.front().front().context();
  for (const auto& row : a) {
    if (row.size() != l) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (const auto& entry : row)
      if (entry.context() != ctx) throw Error(ErrorCode::ContextMismatch, "matrix entries differ in context");
  }
  for (const auto& p : s) check_factors(p, p, ctx);

  const TwiddleTable table = precompute_tables(ctx);
  std::vector<NttVector> s_hat;
  s_hat.reserve(l);
  for (const auto& p : s) {
    s_hat.push_back(ntt_ct(p, table, ctx));
    ++ledger.ntt_count;
  }

  std::vector<Polynomial> out(k, Polynomial::zero(ctx.n(), ctx.q()));
  detail::for_each_index(k, exec, [&](std::size_t i) {
    const auto& row = a[i];
    NttVector acc = pointwise_mul(row[0].spectrum(), s_hat[0]);
    for (std::size_t j = 1; j < l; ++j) acc = pointwise_add(acc, pointwise_mul(row[j].spectrum(), s_hat[j]));
    out[i] = intt_gs(acc, table, ctx);
  });
  ledger.pointwise_mul_count += static_cast<std::uint64_t>(k) * l;
  ledger.intt_count += k;
  return out;
}

bool crt_product_matches(std::uint64_t q, std::uint64_t n, std::uint64_t psi) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const Modulus mod(q);
  // prod starts as the constant 1; multiply by (x - r) for each odd power r.
  std::vector<std::uint64_t> prod{1};
  const std::uint64_t psi_sq = mod.mul(psi, psi);
  std::uint64_t root = mod.reduce(psi);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(prod.size() + 1, 0);
    for (std::size_t d = 0; d < prod.size(); ++d) {
      next[d + 1] = (next[d + 1] + prod[d]) % q;
      next[d] = (next[d] + (q - prod[d] * root % q)) % q;
    }
    prod = std::move(next);
    root = mod.mul(root, psi_sq);
  }
  std::vector<std::uint64_t> target(n + 1, 0);
  target[0] = 1;
  target[n] = 1;
  return prod == target;
}

bool verify_crt_factorization(const ZqContext& ctx, std::size_t n_max) {
  const std::uint64_t psi = ctx.psi();
  if (ctx.n() > n_max) {
    throw Error(ErrorCode::InvalidArgument,
                "n=" + std::to_string(ctx.n()) + " exceeds bound " + std::to_string(n_max));
  }
  return crt_product_matches(ctx.q(), ctx.n(), psi);
}

}  // namespace nttlab
