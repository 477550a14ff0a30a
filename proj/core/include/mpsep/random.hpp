#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mpsep/bitvec.hpp"

namespace mpsep {

/// SplitMix64 finalizer applied to master + (stream + 1) * golden gamma.
/// Derives independent sub-seeds (per trial, per attempt, x vs y) from one
/// 64-bit master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// The reference generator: std::mt19937_64 seeded with a single 64-bit
/// value. Its raw output sequence is fixed by the C++ standard, and all
/// derived draws below avoid implementation-defined distributions, so
/// results are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [low, high] by rejection on the top bits; low <= high.
  std::int64_t uniform_int(std::int64_t low, std::int64_t high);
  /// Uniform on [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform point of {0,1}^width. Bits come from consecutive 64-bit draws,
  /// most significant bit first, one draw per started group of 64 bits.
  BitVec bits(std::size_t width);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpsep
