#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nttlab {

struct BenchConfig {
  std::uint64_t q = 8380417;
  std::uint64_t n_min = 64;
  std::uint64_t n_max = 1024;
  unsigned reps = 9;
  std::uint64_t seed = 1;
  /// Each timing sample repeats the multiply until at least this much wall
  /// time has passed, then reports time per multiply.
  double min_sample_seconds = 2e-3;
};

/// One (n, method) measurement. method is "schoolbook", "ntt-naive" or
/// "ntt-fast"; op_count is the number of modular multiplications.
struct BenchRow {
  std::uint64_t n;
  std::string method;
  double median_seconds;
  std::uint64_t op_count;
};

/// Times single-threaded negacyclic multiplication by the three methods for
/// n = n_min, 2 n_min, ..., n_max on random inputs. Each method's result is
/// checked against the schoolbook product before timing.
/// Throws Error(NotPowerOfTwo / InvalidArgument / NotFriendly) on bad sweeps.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Median time for (n, method); throws std::out_of_range if absent.
double median_for(const std::vector<BenchRow>& rows, std::uint64_t n, const std::string& method);

std::string format_bench_text(const std::vector<BenchRow>& rows);
std::string format_bench_csv(const std::vector<BenchRow>& rows);

}  // namespace nttlab
