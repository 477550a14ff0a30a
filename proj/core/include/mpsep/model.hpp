#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mpsep/bitvec.hpp"
#include "mpsep/rational.hpp"

namespace mpsep {

/// f(x) = H(sum_j w_j x_j - theta), with H(d) = 1 for d >= 0.
struct ThresholdUnit {
  std::vector<Rational> weights;
  Rational theta;

  std::size_t arity() const noexcept { return weights.size(); }
  friend bool operator==(const ThresholdUnit&, const ThresholdUnit&) = default;
};

/// Returns 1 iff sum_j w_j x_j >= theta, compared exactly.
/// Throws DimensionError when the unit's arity differs from x.width().
bool evaluate_unit(const ThresholdUnit& unit, const BitVec& x);

/// A McCulloch-Pitts dynamical system Phi(x) = (f_1(x), ..., f_n(x)).
///
/// When every unit scales to 64-bit integer weights and n <= 64, an
/// integer evaluator is precompiled; results are identical to the exact
/// rational path.
class MPSystem {
 public:
  /// Throws DimensionError unless there are exactly n >= 1 units of arity n.
  explicit MPSystem(std::vector<ThresholdUnit> units);

  std::size_t dimension() const noexcept { return units_.size(); }
  const std::vector<ThresholdUnit>& units() const noexcept { return units_; }
  const ThresholdUnit& unit(std::size_t j) const { return units_.at(j); }

  bool has_fast_path() const noexcept { return fast_.has_value(); }
  /// Phi on the packed form of BitVec::to_u64. Requires has_fast_path().
  std::uint64_t step_packed(std::uint64_t state) const;

  friend bool operator==(const MPSystem& a, const MPSystem& b) { return a.units_ == b.units_; }

 private:
  struct FastUnit {
    std::vector<std::int64_t> weights;  // indexed by bit position from the MSB side
    std::int64_t theta;
  };
  std::vector<ThresholdUnit> units_;
  std::optional<std::vector<FastUnit>> fast_;
};

/// Bit j of the result is evaluate_unit(unit j, x). Throws DimensionError on width mismatch.
BitVec apply_system(const MPSystem& system, const BitVec& x);

/// Ordered pair (X+, X-) of disjoint, duplicate-free point sets of one width.
/// Each side is kept sorted lexicographically.
class Dichotomy {
 public:
  /// Outcome of construction when some point sits on both sides.
  struct Conflict {
    BitVec point;
  };

  /// Deduplicates each side. Throws DimensionError when a point's width differs from `width`.
  static std::variant<Dichotomy, Conflict> make(std::size_t width, std::vector<BitVec> positives,
                                                std::vector<BitVec> negatives);
  /// Like make(), but throws std::invalid_argument on a conflict.
  static Dichotomy make_disjoint(std::size_t width, std::vector<BitVec> positives, std::vector<BitVec> negatives);
  /// Splits `points` by `labels` (true -> X+).
  static std::variant<Dichotomy, Conflict> from_labels(std::size_t width, std::span<const BitVec> points,
                                                       const std::vector<bool>& labels);

  std::size_t width() const noexcept { return width_; }
  const std::vector<BitVec>& positives() const noexcept { return positives_; }
  const std::vector<BitVec>& negatives() const noexcept { return negatives_; }
  std::size_t size() const noexcept { return positives_.size() + negatives_.size(); }

  /// The reversed dichotomy (X-, X+).
  Dichotomy swapped() const;

 private:
  Dichotomy(std::size_t width, std::vector<BitVec> pos, std::vector<BitVec> neg)
      : width_(width), positives_(std::move(pos)), negatives_(std::move(neg)) {}
  std::size_t width_;
  std::vector<BitVec> positives_;
  std::vector<BitVec> negatives_;
};

struct SamplePair {
  BitVec x;
  BitVec y;
  friend bool operator==(const SamplePair&, const SamplePair&) = default;
};

/// Sequence (x^1, y^1, ..., x^m, y^m) of equal-width vectors, m >= 1.
class Trace {
 public:
  /// Throws std::invalid_argument if empty, DimensionError on mixed widths.
  explicit Trace(std::vector<SamplePair> pairs);

  std::size_t width() const noexcept { return pairs_.front().x.width(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<SamplePair>& pairs() const noexcept { return pairs_; }
  const SamplePair& operator[](std::size_t i) const { return pairs_[i]; }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<SamplePair> pairs_;
};

}  // namespace mpsep
