#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mpsep {

/// Fixed-width vector of bits, a point of the hypercube {0,1}^n.
///
/// Indices are zero-based in the API: bit(0) is the "first bit", printed
/// leftmost. Storage is MSB-first inside each 64-bit word, so comparing
/// words orders BitVecs lexicographically by bits.
class BitVec {
 public:
  /// All-zero vector of the given width. Throws std::invalid_argument if width == 0.
  explicit BitVec(std::size_t width);

  /// Parses a string of '0'/'1' characters, first bit leftmost.
  static BitVec from_string(std::string_view bits);
  /// Low `width` bits of `value`, with bit (width-1-i) of value as bit(i),
  /// i.e. the first bit is the most significant. Requires width <= 64.
  static BitVec from_u64(std::uint64_t value, std::size_t width);

  std::size_t width() const noexcept { return width_; }
  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);
  std::size_t popcount() const noexcept;

  /// Inverse of from_u64. Requires width <= 64.
  std::uint64_t to_u64() const;
  std::string to_string() const;

  /// First `m` bits as a new BitVec (1 <= m <= width).
  BitVec prefix(std::size_t m) const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Orders by width, then lexicographically by bits.
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

 private:
  std::size_t width_;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

}  // namespace mpsep
