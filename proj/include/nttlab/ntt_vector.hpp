#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nttlab/params.hpp"

namespace nttlab {

/// Which root the transform evaluates at: powers of omega (cyclic) or the odd
/// powers of psi (negacyclic).
enum class RootKind { Omega, Psi };

enum class Ordering { Normal, BitReversed };

/// Transform-domain vector. Carries the context it was produced under so
/// operands from different rings cannot be mixed silently.
class NttVector {
 public:
  /// Throws LengthMismatch if values.size() != ctx.n(), InvalidArgument on a
  /// non-canonical value.
  NttVector(std::vector<std::uint64_t> values, RootKind kind, Ordering ordering, ZqContext ctx);

  std::span<const std::uint64_t> values() const noexcept { return values_; }
  std::uint64_t operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  RootKind kind() const noexcept { return kind_; }
  Ordering ordering() const noexcept { return ordering_; }
  const ZqContext& context() const noexcept { return ctx_; }

  std::vector<std::uint64_t> take() && { return std::move(values_); }

  friend bool operator==(const NttVector&, const NttVector&) = default;

 private:
  std::vector<std::uint64_t> values_;
  RootKind kind_;
  Ordering ordering_;
  ZqContext ctx_;
};

}  // namespace nttlab
