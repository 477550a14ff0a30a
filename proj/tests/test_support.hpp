#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpsep/bitvec.hpp"
#include "mpsep/model.hpp"
#include "mpsep/random.hpp"

namespace mpsep::testing {

inline BitVec bits(const std::string& s) { return BitVec::from_string(s); }

inline std::vector<BitVec> points(std::initializer_list<const char*> list) {
  std::vector<BitVec> out;
  for (const char* s : list) out.push_back(BitVec::from_string(s));
  return out;
}

inline Dichotomy dichotomy(std::initializer_list<const char*> pos, std::initializer_list<const char*> neg) {
  const auto p = points(pos);
  const auto q = points(neg);
  const std::size_t width = !p.empty() ? p.front().width() : q.front().width();
  return Dichotomy::make_disjoint(width, p, q);
}

inline ThresholdUnit unit(std::vector<long> weights, long theta) {
  ThresholdUnit u;
  for (long w : weights) u.weights.emplace_back(w);
  u.theta = theta;
  return u;
}

/// Unit j has weight 1 on input j and threshold 1.
inline MPSystem identity_system(std::size_t n) {
  std::vector<ThresholdUnit> units;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> w(n, 0);
    w[j] = 1;
    units.push_back(unit(w, 1));
  }
  return MPSystem(units);
}

/// Unit j copies bit j-1 (mod n).
inline MPSystem cyclic_shift_system(std::size_t n) {
  std::vector<ThresholdUnit> units;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> w(n, 0);
    w[(j + n - 1) % n] = 1;
    units.push_back(unit(w, 1));
  }
  return MPSystem(units);
}

inline MPSystem constant_ones_system(std::size_t n) {
  return MPSystem(std::vector<ThresholdUnit>(n, unit(std::vector<long>(n, 0), -1)));
}

/// m distinct uniform points of {0,1}^n (m <= 2^n).
inline std::vector<BitVec> distinct_points(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<BitVec> out;
  while (out.size() < m) {
    BitVec x = rng.bits(n);
    bool seen = false;
    for (const auto& y : out) seen = seen || y == x;
    if (!seen) out.push_back(std::move(x));
  }
  return out;
}

/// Dichotomy of `pts` where bit i of `mask` labels pts[i] positive.
inline Dichotomy labeled(const std::vector<BitVec>& pts, std::uint64_t mask) {
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (std::size_t i = 0; i < pts.size(); ++i) ((mask >> i) & 1U ? pos : neg).push_back(pts[i]);
  return Dichotomy::make_disjoint(pts.front().width(), pos, neg);
}

}  // namespace mpsep::testing
