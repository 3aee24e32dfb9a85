// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nttlab/bench_report.hpp"
#include "nttlab/convolution.hpp"
#include "nttlab/ntt_fast.hpp"
#include "nttlab/ntt_reference.hpp"
#include "nttlab/poly_mul.hpp"
#include "oracles.hpp"

using namespace nttlab;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r{false, ""};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    r.ok = false;
    r.detail += " time limit " + std::to_string(time_limit_s) + " s exceeded";
  }
  if (!r.ok) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << t << ")";
  if (!r.detail.empty()) std::cout << ": " << r.detail;
  std::cout << std::endl;
}

// Power-of-two lengths 2..n_max for which q supports the flavor.
std::vector<std::uint64_t> grid(std::uint64_t q, Flavor flavor, std::uint64_t n_max = 1024) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= n_max; n *= 2)
    if (flavor == Flavor::Negacyclic ? is_nwc_friendly(q, n) : is_pwc_friendly(q, n)) out.push_back(n);
  return out;
}

constexpr std::array<std::uint64_t, 2> kModuli{7681, 8380417};

std::vector<std::uint64_t> values_of(const NttVector& v) { return {v.values().begin(), v.values().end()}; }

Outcome c1() {
  const auto omega = find_omega(7681, 4);
  const auto all = oracle::all_primitive_roots(7681, 4);
  const bool ok = omega == 3383 && all == std::set<std::uint64_t>{3383, 4298};
  return {ok, "omega=" + std::to_string(omega) + ", brute-force set size " + std::to_string(all.size())};
}

Outcome c2() {
  const auto psi = find_psi(7681, 4);
  const auto all = oracle::all_psi(7681, 4, find_omega(7681, 4));
  const bool ok = psi == 1925 && all == std::set<std::uint64_t>{1925, 5756};
  return {ok, "psi=" + std::to_string(psi) + ", brute-force set size " + std::to_string(all.size())};
}

Outcome c3() {
  std::mt19937_64 rng(3);
  std::uint64_t checked = 0;
  for (auto q : kModuli) {
    for (auto n : grid(q, Flavor::Cyclic)) {
      const auto ctx = make_context(q, n, Flavor::Cyclic);
      const auto table = precompute_cyclic_tables(ctx);
      for (int i = 0; i < 100; ++i) {
        const auto v = oracle::random_poly(rng, n, q);
        if (intt_naive(ntt_naive(v, ctx), ctx) != v) return {false, "ntt_naive q=" + std::to_string(q) + " n=" + std::to_string(n)};
        if (intt_gs_cyclic(ntt_ct_cyclic(v, table, ctx), table, ctx) != v)
          return {false, "ntt_ct_cyclic q=" + std::to_string(q) + " n=" + std::to_string(n)};
        checked += 2;
      }
    }
    for (auto n : grid(q, Flavor::Negacyclic)) {
      const auto ctx = make_context(q, n, Flavor::Negacyclic);
      const auto table = precompute_tables(ctx);
      for (int i = 0; i < 100; ++i) {
        const auto v = oracle::random_poly(rng, n, q);
        if (intt_psi_naive(ntt_psi_naive(v, ctx), ctx) != v) return {false, "ntt_psi_naive q=" + std::to_string(q) + " n=" + std::to_string(n)};
        if (intt_gs(ntt_ct(v, table, ctx), table, ctx) != v) return {false, "ntt_ct q=" + std::to_string(q) + " n=" + std::to_string(n)};
        checked += 2;
      }
    }
  }
  return {true, std::to_string(checked) + " round trips"};
}

Outcome c4() {
  std::mt19937_64 rng(4);
  std::uint64_t pairs = 0;
  for (auto flavor : {Flavor::Cyclic, Flavor::Negacyclic}) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
    for (auto q : kModuli)
      for (auto n : grid(q, flavor)) cells.emplace_back(q, n);
    for (int i = 0; i < 1000; ++i) {
      const auto [q, n] = cells[static_cast<std::size_t>(i) % cells.size()];
      const auto ctx = make_context(q, n, flavor);
      const auto u = oracle::random_poly(rng, n, q);
      const auto v = oracle::random_poly(rng, n, q);
      bool ok;
      if (flavor == Flavor::Cyclic) {
        const auto expected = cyclic_convolution(u, v);
        ok = mul_cyclic(u, v, ctx, MulPath::Fast) == expected && mul_cyclic(u, v, ctx, MulPath::Naive) == expected;
      } else {
        const auto expected = negacyclic_convolution(u, v);
        ok = mul_negacyclic(u, v, ctx, MulPath::Fast) == expected &&
             mul_negacyclic(u, v, ctx, MulPath::Naive) == expected;
      }
      if (!ok) return {false, "mismatch q=" + std::to_string(q) + " n=" + std::to_string(n)};
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs, both paths"};
}

Outcome c5() {
  std::mt19937_64 rng(5);
  std::uint64_t checked = 0;
  for (auto q : kModuli) {
    for (auto n : grid(q, Flavor::Negacyclic)) {
      const auto ctx = make_context(q, n, Flavor::Negacyclic);
      const auto table = precompute_tables(ctx);
      for (int i = 0; i < 100; ++i) {
        const auto v = oracle::random_poly(rng, n, q);
        const auto fast = ntt_ct(v, table, ctx);
        const auto naive = ntt_psi_naive(v, ctx);
        if (bitrev_permute(fast.values()) != values_of(naive))
          return {false, "forward q=" + std::to_string(q) + " n=" + std::to_string(n)};
        const NttVector spectrum_bo(bitrev_permute(oracle::random_vec(rng, n, q)), RootKind::Psi, Ordering::BitReversed, ctx);
        const NttVector spectrum_no(bitrev_permute(spectrum_bo.values()), RootKind::Psi, Ordering::Normal, ctx);
        if (intt_gs(spectrum_bo, table, ctx) != intt_psi_naive(spectrum_no, ctx))
          return {false, "inverse q=" + std::to_string(q) + " n=" + std::to_string(n)};
        ++checked;
      }
    }
    for (auto n : grid(q, Flavor::Cyclic)) {
      const auto ctx = make_context(q, n, Flavor::Cyclic);
      const auto table = precompute_cyclic_tables(ctx);
      for (int i = 0; i < 100; ++i) {
        const auto v = oracle::random_poly(rng, n, q);
        if (bitrev_permute(ntt_ct_cyclic(v, table, ctx).values()) != values_of(ntt_naive(v, ctx)))
          return {false, "cyclic forward q=" + std::to_string(q) + " n=" + std::to_string(n)};
        const NttVector spectrum_bo(bitrev_permute(oracle::random_vec(rng, n, q)), RootKind::Omega, Ordering::BitReversed, ctx);
        const NttVector spectrum_no(bitrev_permute(spectrum_bo.values()), RootKind::Omega, Ordering::Normal, ctx);
        if (intt_gs_cyclic(spectrum_bo, table, ctx) != intt_naive(spectrum_no, ctx))
          return {false, "cyclic inverse q=" + std::to_string(q) + " n=" + std::to_string(n)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " vectors, forward and inverse"};
}

Outcome c6() {
  std::uint64_t contexts = 0;
  for (std::uint64_t q : {17ull, 7681ull, 8380417ull}) {
    if (!crt_product_matches(q, 1, q - 1)) return {false, "n=1 q=" + std::to_string(q)};
    ++contexts;
    for (std::uint64_t n = 2; n <= 64; ++n) {
      if (!is_nwc_friendly(q, n)) continue;
      if (!verify_crt_factorization(make_context(q, n, Flavor::Negacyclic), 64))
        return {false, "q=" + std::to_string(q) + " n=" + std::to_string(n)};
      ++contexts;
    }
  }
  return {true, std::to_string(contexts) + " contexts"};
}

Outcome c7() {
  const std::string cmd = std::string(NTTLAB_CLI) + " dilithium-demo";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "cannot run " + cmd};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  const bool exit_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  const bool counts = out.find("baseline: 90 transforms, optimized: 11 (5 NTT + 6 INTT)") != std::string::npos;
  const bool verified = out.find("row 0 vs schoolbook: VERIFIED") != std::string::npos;
  std::string detail = std::string("exit ") + (exit_ok ? "0" : "nonzero") + ", counts " + (counts ? "90/11" : "wrong") +
                       ", row check " + (verified ? "VERIFIED" : "missing");
  return {exit_ok && counts && verified, detail};
}

Outcome c8() {
  std::mt19937_64 rng(8);
  const auto ctx = make_context(8380417, 256, Flavor::Negacyclic);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> fs, gs;
    for (int i = 0; i < 5; ++i) {
      fs.push_back(oracle::random_poly(rng, 256, ctx.q()));
      gs.push_back(oracle::random_poly(rng, 256, ctx.q()));
    }
    TransformLedger ledger;
    const auto got = sum_of_products(fs, gs, ctx, ledger);
    auto expected = negacyclic_convolution(fs[0], gs[0]);
    for (int i = 1; i < 5; ++i) expected = add(expected, negacyclic_convolution(fs[i], gs[i]));
    if (got != expected) return {false, "trial " + std::to_string(trial)};
    if (ledger.ntt_count != 10 || ledger.intt_count != 1) return {false, "ledger counts"};
  }
  return {true, "100 trials, 10 NTT + 1 INTT each"};
}

Outcome c9() {
  BenchConfig cfg;
  cfg.q = 8380417;
  cfg.n_min = 512;
  cfg.n_max = 1024;
  cfg.reps = 9;
  cfg.seed = 1;
  const auto rows = run_bench(cfg);
  const double school_512 = median_for(rows, 512, "schoolbook");
  const double school_1024 = median_for(rows, 1024, "schoolbook");
  const double fast_512 = median_for(rows, 512, "ntt-fast");
  const double fast_1024 = median_for(rows, 1024, "ntt-fast");
  const double speedup = school_1024 / fast_1024;
  const double fast_growth = fast_1024 / fast_512;
  const double school_growth = school_1024 / school_512;
  char buf[200];
  std::snprintf(buf, sizeof buf, "speedup at 1024 = %.1fx (>= 10), fast growth %.2fx (<= 3), schoolbook growth %.2fx (>= 3)",
                speedup, fast_growth, school_growth);
  return {speedup >= 10 && fast_growth <= 3 && school_growth >= 3, buf};
}

Outcome c10() {
  for (std::uint64_t n = 2; n <= 4096; n *= 2) {
    const auto ctx = make_context(8380417, n, Flavor::Negacyclic);
    const auto table = precompute_tables(ctx);
    const auto ctable = precompute_cyclic_tables(ctx);
    const std::uint64_t expected = n / 2 * log2_exact(n);
    TransformStats f, i, fc, ic;
    const auto y = ntt_ct(Polynomial::zero(n, ctx.q()), table, ctx, &f);
    (void)intt_gs(y, table, ctx, &i);
    const auto yc = ntt_ct_cyclic(Polynomial::zero(n, ctx.q()), ctable, ctx, &fc);
    (void)intt_gs_cyclic(yc, ctable, ctx, &ic);
    for (auto got : {f.butterflies, i.butterflies, fc.butterflies, ic.butterflies})
      if (got != expected)
        return {false, "n=" + std::to_string(n) + " counted " + std::to_string(got) + ", expected " + std::to_string(expected)};
  }
  return {true, "n = 2..4096, all four fast transforms"};
}

}  // namespace

int main() {
  criterion(1, "omega for (7681, 4) and its brute-force root set", 1, c1);
  criterion(2, "psi for (7681, 4) and its brute-force root set", 1, c2);
  criterion(3, "round trip intt(ntt(v)) = v, four transform pairs", 30, c3);
  criterion(4, "mul_cyclic / mul_negacyclic equal the schoolbook oracle", 60, c4);
  criterion(5, "fast transforms equal naive transforms", 0, c5);
  criterion(6, "x^n + 1 equals the product of (x - psi^odd)", 10, c6);
  criterion(7, "dilithium-demo transform accounting 90 -> 11", 0, c7);
  criterion(8, "sum_of_products equals the sum of individual products", 0, c8);
  criterion(9, "fast multiply scales quasilinearly, schoolbook quadratically", 300, c9);
  criterion(10, "butterfly count is (n/2) log2 n", 0, c10);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
