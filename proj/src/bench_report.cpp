#include "nttlab/bench_report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "nttlab/convolution.hpp"
#include "nttlab/poly_mul.hpp"

namespace nttlab {
namespace {

using Clock = std::chrono::steady_clock;

Polynomial random_poly(std::mt19937_64& rng, std::uint64_t n, std::uint64_t q) {
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  std::vector<std::uint64_t> c(n);
  for (auto& x : c) x = dist(rng);
  return Polynomial(std::move(c), q);
}

double time_median(const std::function<Polynomial()>& op, unsigned reps, double min_seconds) {
  volatile std::uint64_t sink = 0;
  std::vector<double> samples;
  samples.reserve(reps);
  for (unsigned r = 0; r < reps; ++r) {
    std::uint64_t iters = 0;
    const auto start = Clock::now();
    double elapsed = 0;
    do {
      sink = sink + op()[0];
      ++iters;
      elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < min_seconds);
    samples.push_back(elapsed / static_cast<double>(iters));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (!is_power_of_two(config.n_min) || !is_power_of_two(config.n_max)) {
    throw Error(ErrorCode::NotPowerOfTwo, "bench sweep bounds must be powers of two");
  }
  if (config.n_min < 2 || config.n_min > config.n_max) {
    throw Error(ErrorCode::InvalidArgument, "bench needs 2 <= n_min <= n_max");
  }
  if (config.reps == 0) throw Error(ErrorCode::InvalidArgument, "reps must be >= 1");

  std::vector<ZqContext> contexts;
  for (std::uint64_t n = config.n_min; n <= config.n_max; n *= 2)
    contexts.push_back(make_context(config.q, n, Flavor::Negacyclic));

  std::mt19937_64 rng(config.seed);
  std::vector<BenchRow> rows;
  for (const auto& ctx : contexts) {
    const std::uint64_t n = ctx.n();
    const Polynomial u = random_poly(rng, n, ctx.q());
    const Polynomial v = random_poly(rng, n, ctx.q());
    const TwiddleTable table = precompute_tables(ctx);

    const Polynomial expected = negacyclic_convolution(u, v);
    if (mul_negacyclic(u, v, ctx, MulPath::Naive) != expected ||
        mul_negacyclic(u, v, ctx, table) != expected) {
      throw std::logic_error("transform product disagrees with schoolbook at n=" + std::to_string(n));
    }

    const std::uint64_t log_n = log2_exact(n);
    rows.push_back({n, "schoolbook",
                    time_median([&] { return negacyclic_convolution(u, v); }, config.reps,
                                config.min_sample_seconds),
                    n * n});
    rows.push_back({n, "ntt-naive",
                    time_median([&] { return mul_negacyclic(u, v, ctx, MulPath::Naive); },
                                config.reps, config.min_sample_seconds),
                    3 * n * n + 2 * n});
    rows.push_back({n, "ntt-fast",
                    time_median([&] { return mul_negacyclic(u, v, ctx, table); }, config.reps,
                                config.min_sample_seconds),
                    3 * (n / 2) * log_n + 2 * n});
  }
  return rows;
}

double median_for(const std::vector<BenchRow>& rows, std::uint64_t n, const std::string& method) {
  for (const auto& r : rows)
    if (r.n == n && r.method == method) return r.median_seconds;
  throw std::out_of_range("no bench row for n=" + std::to_string(n) + " method=" + method);
}

std::string format_bench_text(const std::vector<BenchRow>& rows) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%8s  %-12s %16s %14s\n", "n", "method", "median_us", "mod_muls");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%8llu  %-12s %16.3f %14llu\n",
                  static_cast<unsigned long long>(r.n), r.method.c_str(), r.median_seconds * 1e6,
                  static_cast<unsigned long long>(r.op_count));
    out += buf;
  }
  return out;
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,method,median_seconds,op_count\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%llu,%s,%.9g,%llu\n", static_cast<unsigned long long>(r.n),
                  r.method.c_str(), r.median_seconds, static_cast<unsigned long long>(r.op_count));
    out += buf;
  }
  return out;
}

}  // namespace nttlab
