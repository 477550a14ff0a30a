#include "mpsep/random.hpp"

#include <bit>
#include <stdexcept>

namespace mpsep {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  if (bound == 1) return 0;
  // Smallest all-ones mask covering bound - 1, then reject out-of-range draws.
  const int shift = std::countl_zero(bound - 1);
  while (true) {
    const std::uint64_t v = engine_() >> shift;
    if (v < bound) return v;
  }
}

std::int64_t Rng::uniform_int(std::int64_t low, std::int64_t high) {
  if (low > high) throw std::invalid_argument("Rng::uniform_int needs low <= high");
  const auto span = static_cast<std::uint64_t>(high) - static_cast<std::uint64_t>(low);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(low) + below(span + 1));
}

BitVec Rng::bits(std::size_t width) {
  BitVec v(width);
  for (std::size_t base = 0; base < width; base += 64) {
    const std::uint64_t word = engine_();
    for (std::size_t i = 0; i < 64 && base + i < width; ++i) v.set(base + i, ((word >> (63 - i)) & 1U) != 0);
  }
  return v;
}

}  // namespace mpsep
