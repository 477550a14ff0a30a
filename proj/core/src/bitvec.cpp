#include "mpsep/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace mpsep {

namespace {

constexpr std::size_t kWordBits = 64;

std::uint64_t mask_for(std::size_t i) { return std::uint64_t{1} << (kWordBits - 1 - i % kWordBits); }

}  // namespace

BitVec::BitVec(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {
  if (width == 0) throw std::invalid_argument("BitVec width must be positive");
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(bits) + "'");
    }
  }
  return v;
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t width) {
  if (width > kWordBits) throw std::invalid_argument("from_u64 requires width <= 64");
  BitVec v(width);
  v.words_[0] = width == kWordBits ? value : (value & ((std::uint64_t{1} << width) - 1)) << (kWordBits - width);
  return v;
}

bool BitVec::bit(std::size_t i) const {
  if (i >= width_) throw std::out_of_range("BitVec index out of range");
  return (words_[i / kWordBits] & mask_for(i)) != 0;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= width_) throw std::out_of_range("BitVec index out of range");
  if (value) {
    words_[i / kWordBits] |= mask_for(i);
  } else {
    words_[i / kWordBits] &= ~mask_for(i);
  }
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::uint64_t BitVec::to_u64() const {
  if (width_ > kWordBits) throw std::invalid_argument("to_u64 requires width <= 64");
  return width_ == kWordBits ? words_[0] : words_[0] >> (kWordBits - width_);
}

std::string BitVec::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

BitVec BitVec::prefix(std::size_t m) const {
  if (m == 0 || m > width_) throw std::invalid_argument("prefix length must be in [1, width]");
  BitVec out(m);
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = words_[w];
  if (const auto rem = m % kWordBits; rem != 0) {
    out.words_.back() &= ~std::uint64_t{0} << (kWordBits - rem);
  }
  return out;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  return a.words_ <=> b.words_;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::size_t h = v.width() * 0x9e3779b97f4a7c15ULL;
  for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace mpsep
