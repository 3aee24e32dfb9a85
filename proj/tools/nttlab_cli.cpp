// nttlab command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 parameter / friendliness, 3 I/O or parse.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nttlab/batch.hpp"
#include "nttlab/bench_report.hpp"
#include "nttlab/convolution.hpp"
#include "nttlab/poly_file.hpp"
#include "nttlab/poly_mul.hpp"

namespace {

using namespace nttlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParams = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for conditions that are parameter problems but not library errors.
struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* flavor_name(Flavor f) { return f == Flavor::Negacyclic ? "negacyclic" : "cyclic"; }

Flavor parse_flavor(const std::string& s) {
  return s == "negacyclic" ? Flavor::Negacyclic : Flavor::Cyclic;
}

/// Flags win over the file directive; a disagreement is worth a warning.
std::pair<std::uint64_t, std::uint64_t> resolve_params(std::optional<std::uint64_t> q_flag,
                                                       std::optional<std::uint64_t> n_flag,
                                                       const std::vector<const PolyFile*>& files) {
  std::optional<std::uint64_t> q_file;
  std::optional<std::uint64_t> n_file;
  for (const auto* f : files) {
    if (!q_file && f->q) q_file = f->q;
    if (!n_file && f->n) n_file = f->n;
  }
  if (q_flag && q_file && *q_flag != *q_file)
    std::cerr << "warning: --q " << *q_flag << " overrides file directive q=" << *q_file << "\n";
  if (n_flag && n_file && *n_flag != *n_file)
    std::cerr << "warning: --n " << *n_flag << " overrides file directive n=" << *n_file << "\n";
  const auto q = q_flag ? q_flag : q_file;
  const auto n = n_flag ? n_flag : n_file;
  if (!q || !n) throw UsageError("q and n must be given by --q/--n or a '# q=<int> n=<int>' header");
  return {*q, *n};
}

std::vector<Polynomial> to_polys(const PolyFile& file, std::uint64_t q) {
  std::vector<Polynomial> out;
  out.reserve(file.rows.size());
  for (const auto& row : file.rows) out.emplace_back(row, q);
  return out;
}

void emit(const std::optional<std::string>& out_path, const PolyFile& file) {
  if (out_path) {
    write_poly_file(*out_path, file);
  } else {
    std::cout << serialize_poly_file(file);
  }
}

// ---------------------------------------------------------------- params

int cmd_params_check(std::uint64_t q, std::uint64_t n) {
  if (q < 3 || q % 2 == 0) throw ParamError("modulus must be odd and >= 3 (got " + std::to_string(q) + ")");
  if (n < 2) throw ParamError("n must be >= 2");

  const bool nwc = is_nwc_friendly(q, n);
  const bool pwc = nwc || is_pwc_friendly(q, n);
  std::cout << "q=" << q << " n=" << n << "\n";
  std::cout << "class: " << (nwc ? "NWC" : pwc ? "PWC" : "none") << "\n";
  if (!pwc) return kExitParams;

  const auto ctx = make_context(q, n, nwc ? Flavor::Negacyclic : Flavor::Cyclic);
  std::cout << "omega=" << ctx.omega() << "\n";
  std::cout << "omega_inv=" << ctx.omega_inv() << "\n";
  if (nwc) {
    std::cout << "psi=" << ctx.psi() << "\n";
    std::cout << "psi_inv=" << ctx.psi_inv() << "\n";
  }
  std::cout << "n_inv=" << ctx.n_inv() << "\n";
  return nwc ? kExitOk : kExitParams;
}

int cmd_params_find(std::uint64_t n, std::uint64_t min_q, std::uint64_t count) {
  if (!is_power_of_two(n) || n < 2) throw ParamError("n must be a power of two >= 2");
  const std::uint64_t step = 2 * n;
  std::uint64_t q = min_q <= 1 ? 1 : min_q + (step - (min_q - 1) % step) % step;
  if (q < 3) q += step;
  for (std::uint64_t found = 0; found < count && q < Modulus::kLimit; q += step) {
    if (!is_prime(q)) continue;
    std::cout << "q=" << q << " psi=" << find_psi(q, n) << "\n";
    ++found;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- ntt / mul

struct NttArgs {
  std::string direction = "fwd";
  std::string flavor = "negacyclic";
  std::string impl = "naive";
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> n;
  std::string in_path;
  std::optional<std::string> out_path;
};

int cmd_ntt(const NttArgs& args) {
  const PolyFile input = read_poly_file(args.in_path);
  const auto [q, n] = resolve_params(args.q, args.n, {&input});
  const Flavor flavor = parse_flavor(args.flavor);
  const Impl impl = args.impl == "fast" ? Impl::Fast : Impl::Naive;
  const auto ctx = make_context(q, n, flavor);
  if (impl == Impl::Fast && !is_power_of_two(n)) {
    throw ParamError("--impl fast needs a power-of-two n (got " + std::to_string(n) + ")");
  }
  check_rows(input, q, n);

  PolyFile out;
  out.header = {directive_line(q, n)};
  if (args.direction == "fwd") {
    out.header.push_back(std::string("# ") + flavor_name(flavor) +
                         " forward transform, normal order (decimation in time on the fast path)");
    out.rows = forward_batch(to_polys(input, q), ctx, flavor, impl, Execution::Serial);
  } else {
    out.header.push_back(std::string("# ") + flavor_name(flavor) + " inverse transform");
    for (const auto& p : inverse_batch(input.rows, ctx, flavor, impl, Execution::Serial))
      out.rows.emplace_back(p.coeffs().begin(), p.coeffs().end());
  }
  emit(args.out_path, out);
  return kExitOk;
}

struct MulArgs {
  std::string ring = "negacyclic";
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> n;
  std::string a_path;
  std::string b_path;
  std::optional<std::string> out_path;
};

int cmd_mul(const MulArgs& args) {
  const PolyFile a = read_poly_file(args.a_path);
  const PolyFile b = read_poly_file(args.b_path);
  const auto [q, n] = resolve_params(args.q, args.n, {&a, &b});
  const Flavor flavor = parse_flavor(args.ring);
  const auto ctx = make_context(q, n, flavor);
  check_rows(a, q, n);
  check_rows(b, q, n);
  if (a.rows.size() != b.rows.size()) {
    throw ParseError(0, "input files hold " + std::to_string(a.rows.size()) + " and " +
                            std::to_string(b.rows.size()) + " polynomials");
  }

  PolyFile out;
  out.header = {directive_line(q, n), std::string("# ") + flavor_name(flavor) + " product"};
  for (const auto& p : multiply_batch(to_polys(a, q), to_polys(b, q), ctx, flavor, Execution::Serial))
    out.rows.emplace_back(p.coeffs().begin(), p.coeffs().end());
  emit(args.out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------- bench / demo

int cmd_bench(const BenchConfig& config, bool csv) {
  std::cout << "seed: " << config.seed << "\n";
  std::cout << "q=" << config.q << " reps=" << config.reps << "\n";
  const auto rows = run_bench(config);
  std::cout << (csv ? format_bench_csv(rows) : format_bench_text(rows));
  return kExitOk;
}

struct DemoArgs {
  std::uint64_t q = 8380417;
  std::uint64_t n = 256;
  std::size_t k = 6;
  std::size_t l = 5;
  std::uint64_t seed = 1;
};

int cmd_dilithium_demo(const DemoArgs& args) {
  if (args.k == 0 || args.l == 0) throw ParamError("k and l must be >= 1");
  const auto ctx = make_context(args.q, args.n, Flavor::Negacyclic);
  if (!is_power_of_two(args.n)) throw ParamError("the demo uses the fast transforms; n must be a power of two");

  std::mt19937_64 rng(args.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, args.q - 1);
  auto sample = [&] {
    std::vector<std::uint64_t> c(args.n);
    for (auto& x : c) x = dist(rng);
    return c;
  };

  // A is sampled directly in the transform domain; s lives in the time domain.
  NttMatrix a(args.k);
  for (auto& row : a)
    for (std::size_t j = 0; j < args.l; ++j) row.push_back(NttDomainPoly::from_values(sample(), ctx));
  std::vector<Polynomial> s;
  for (std::size_t j = 0; j < args.l; ++j) s.emplace_back(sample(), args.q);

  TransformLedger ledger;
  const auto t = matvec_ntt(a, s, ledger, Execution::Serial);
  const auto baseline = per_product_baseline(args.k, args.l);

  std::cout << "seed: " << args.seed << "\n";
  std::cout << "q=" << args.q << " n=" << args.n << " matrix " << args.k << "x" << args.l << "\n";
  std::cout << "baseline breakdown: " << baseline.ntt_count << " NTT + " << baseline.intt_count
            << " INTT (2 NTT + 1 INTT per entry product)\n";
  std::cout << "baseline: " << baseline.transforms() << " transforms, optimized: " << ledger.transforms()
            << " (" << ledger.ntt_count << " NTT + " << ledger.intt_count << " INTT)\n";
  std::cout << "pointwise products: " << ledger.pointwise_mul_count << "\n";

  const TwiddleTable table = precompute_tables(ctx);
  Polynomial expected = Polynomial::zero(args.n, args.q);
  for (std::size_t j = 0; j < args.l; ++j)
    expected = add(expected, negacyclic_convolution(intt_gs(a[0][j].spectrum(), table, ctx), s[j]));
  const bool ok = expected == t[0];
  std::cout << "row 0 vs schoolbook: " << (ok ? "VERIFIED" : "MISMATCH") << "\n";
  return ok ? kExitOk : kExitUsage;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch:
    case ErrorCode::ModulusMismatch:
      return kExitIo;
    default:
      return kExitParams;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Number theoretic transforms and polynomial products over Z_q[x]/(x^n +- 1).\n"
               "Polynomial files hold one polynomial per line, decimal coefficients separated\n"
               "by commas, constant term first; an optional '# q=<int> n=<int>' header supplies\n"
               "the parameters."};
  app.require_subcommand(1);

  auto* params = app.add_subcommand("params", "NTT-friendly parameter checks and search");
  params->require_subcommand(1);
  std::uint64_t check_q = 0, check_n = 0;
  auto* check = params->add_subcommand("check", "classify q for length n and print its roots");
  check->add_option("--q", check_q, "modulus")->required();
  check->add_option("--n", check_n, "transform length")->required();
  std::uint64_t find_n = 0, find_min_q = 3, find_count = 1;
  auto* find = params->add_subcommand("find", "list primes q >= min-q with q = 1 mod 2n");
  find->add_option("--n", find_n, "transform length (power of two)")->required();
  find->add_option("--min-q", find_min_q, "smallest modulus to consider");
  find->add_option("--count", find_count, "how many primes to list");

  NttArgs ntt_args;
  auto* ntt = app.add_subcommand("ntt", "forward or inverse transform of every polynomial in a file");
  ntt->add_option("--direction", ntt_args.direction)->check(CLI::IsMember({"fwd", "inv"}));
  ntt->add_option("--flavor", ntt_args.flavor)->check(CLI::IsMember({"cyclic", "negacyclic"}));
  ntt->add_option("--impl", ntt_args.impl)->check(CLI::IsMember({"naive", "fast"}));
  ntt->add_option("--q", ntt_args.q);
  ntt->add_option("--n", ntt_args.n);
  ntt->add_option("--in", ntt_args.in_path, "input polynomial file")->required();
  ntt->add_option("--out", ntt_args.out_path, "output file (default: stdout)");

  MulArgs mul_args;
  auto* mul = app.add_subcommand("mul", "line-by-line products of two polynomial files");
  mul->add_option("--ring", mul_args.ring)->check(CLI::IsMember({"cyclic", "negacyclic"}));
  mul->add_option("--q", mul_args.q);
  mul->add_option("--n", mul_args.n);
  mul->add_option("--a", mul_args.a_path)->required();
  mul->add_option("--b", mul_args.b_path)->required();
  mul->add_option("--out", mul_args.out_path, "output file (default: stdout)");

  BenchConfig bench_config;
  bool bench_csv = false;
  auto* bench = app.add_subcommand("bench", "time schoolbook vs naive-NTT vs fast-NTT multiplication");
  bench->add_option("--q", bench_config.q);
  bench->add_option("--n-min", bench_config.n_min);
  bench->add_option("--n-max", bench_config.n_max);
  bench->add_option("--reps", bench_config.reps);
  bench->add_option("--seed", bench_config.seed);
  bench->add_flag("--csv", bench_csv, "machine-readable output");

  DemoArgs demo_args;
  auto* demo = app.add_subcommand("dilithium-demo", "transform accounting for a k x l matrix-vector product");
  demo->add_option("--q", demo_args.q);
  demo->add_option("--n", demo_args.n);
  demo->add_option("--k", demo_args.k, "matrix rows");
  demo->add_option("--l", demo_args.l, "matrix columns");
  demo->add_option("--seed", demo_args.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_params_check(check_q, check_n);
    if (*find) return cmd_params_find(find_n, find_min_q, find_count);
    if (*ntt) return cmd_ntt(ntt_args);
    if (*mul) return cmd_mul(mul_args);
    if (*bench) return cmd_bench(bench_config, bench_csv);
    if (*demo) return cmd_dilithium_demo(demo_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
