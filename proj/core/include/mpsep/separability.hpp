#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "mpsep/bitvec.hpp"
#include "mpsep/model.hpp"
#include "mpsep/rational.hpp"

namespace mpsep {

/// Hyperplane (normal, offset): normal.x > offset on X+, normal.x < offset on X-.
struct Separator {
  std::vector<Rational> normal;
  Rational offset;
  friend bool operator==(const Separator&, const Separator&) = default;
};

/// Convex combinations of X+ and of X- that meet in a common point. Only
/// points with a nonzero coefficient are stored; maps keep points in
/// lexicographic order.
struct HullWitness {
  std::map<BitVec, Rational> positive;
  std::map<BitVec, Rational> negative;
  friend bool operator==(const HullWitness&, const HullWitness&) = default;
};

/// sum lambda_x x over the positive side (the common point of a valid witness).
std::vector<Rational> common_point(const HullWitness& witness, std::size_t width);

enum class Separability { kSeparable, kInseparable };

struct SolveOptions {
  /// Guess the final basis with a double-precision Phase I on a perturbed
  /// copy, move the exact tableau there, and continue exactly. Falls back to
  /// a cold exact solve when the guess is not exactly primal feasible. The
  /// verdict and certificate checks never depend on floating point.
  bool warm_start = true;
};

class SeparabilityResult {
 public:
  explicit SeparabilityResult(Separator s) : witness_(std::move(s)) {}
  explicit SeparabilityResult(HullWitness w) : witness_(std::move(w)) {}

  Separability verdict() const noexcept {
    return std::holds_alternative<Separator>(witness_) ? Separability::kSeparable : Separability::kInseparable;
  }
  bool separable() const noexcept { return verdict() == Separability::kSeparable; }
  const Separator& separator() const { return std::get<Separator>(witness_); }
  const HullWitness& hull_witness() const { return std::get<HullWitness>(witness_); }
  /// Exact pivots performed (0 for inputs decided without a solve).
  std::size_t pivots = 0;
  /// True when the exact solve started from a floating-point basis guess.
  bool warm_started = false;

 private:
  std::variant<Separator, HullWitness> witness_;
};

/// Decides strict linear separability exactly and returns a certificate.
///
/// Works on the Farkas side of the margin-1 system: Phase I of
///   sum_i s_i u_i (x_i, -1) = 0,  sum_i u_i = 1,  u >= 0
/// (s_i = +1 on X+, -1 on X-) with fraction-free integer pivoting. A
/// feasible u is a hull witness (lambda = 2u on X+, mu = 2u on X-). Otherwise
/// the Phase I duals give (normal, offset) with s_i (normal.x_i - offset) > 0,
/// emitted as a primitive integer vector.
///
/// Entering columns follow Dantzig's rule until a run of degenerate pivots is
/// seen, then the least-index rule for the rest of the solve; the ratio test
/// breaks ties by least basic index. Both sides empty gives normal 0, offset 0
/// (vacuous); one side empty gives normal 0 and offset -1 (only X+) or 1
/// (only X-).
SeparabilityResult decide_separable(const Dichotomy& d, const SolveOptions& options = {});

/// Both strict inequality families hold exactly. False on width mismatch.
bool verify_separator(const Dichotomy& d, const Separator& s);

/// Keys belong to the right sides, coefficients are nonnegative, each side
/// sums to 1, and the two combinations agree coordinatewise.
bool verify_hull_witness(const Dichotomy& d, const HullWitness& w);

/// Independent ground truth by exhaustive search over integer vectors
/// (y_1..y_{n+1}) in [-bound, bound]^{n+1}, evaluated on the +-1 re-encoding
/// x -> 2x - 1 of the points (an affine bijection of the cube, so strict
/// separability is unchanged). With bound 4 this finds every threshold
/// function of n <= 4 variables. Throws GuardError when n > 5 or more than
/// 32 points.
Separability oracle_separable(const Dichotomy& d, int bound);

/// All labelings of `points` (bit i of a mask = label of points[i]) that the
/// same search realizes, sorted ascending. Same guards as oracle_separable;
/// points must be distinct.
std::vector<std::uint64_t> oracle_separable_labelings(std::span<const BitVec> points, int bound);

}  // namespace mpsep
