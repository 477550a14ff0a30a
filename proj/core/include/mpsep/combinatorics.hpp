#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpsep/bitvec.hpp"
#include "mpsep/rational.hpp"
#include "mpsep/separability.hpp"

namespace mpsep {

/// 2 * sum_{i=0}^{n} C(m-1, i): the Cover/Winder count of separable
/// dichotomies of m points in general position in R^n, an upper bound for
/// any m points. Throws std::invalid_argument when m == 0.
BigInt cover_bound(std::uint64_t m, std::uint64_t n);

/// 2 * sum_{i=0}^{n+1} C(m, i), the Sauer-Shelah bound with VC dimension n+1.
BigInt sauer_shelah_bound(std::uint64_t m, std::uint64_t n);

/// min(1, 2^{-m+1} * sum_{i=0}^{n} C(m-1, i)).
Rational probability_bound(std::uint64_t m, std::uint64_t n);

/// prod_{i=0}^{m-1} (1 - i / 2^n): probability that m uniform draws from
/// {0,1}^n are pairwise distinct. Zero when m > 2^n.
Rational distinct_probability(std::uint64_t m, std::uint64_t n);

constexpr std::size_t kDefaultBruteForceLimit = 20;

/// Number of ordered dichotomies of `points` (deduplicated) that are
/// linearly separable, by deciding all 2^|X| labelings. Throws GuardError
/// when |X| exceeds `max_points`.
BigInt count_separable(std::span<const BitVec> points, std::size_t max_points = kDefaultBruteForceLimit);

/// Every point of {0,1}^n in lexicographic order (n <= 20).
std::vector<BitVec> full_cube(std::size_t n);

struct ConfidenceInterval {
  double low = 0.0;
  double high = 1.0;
};

/// 95% Wilson score interval (z = 1.959963984540054), clamped to [0, 1] and
/// widened if needed so it contains hits / trials.
ConfidenceInterval wilson_interval(std::uint64_t hits, std::uint64_t trials);

struct EstimateReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  Rational estimate;
  ConfidenceInterval interval;
  std::uint64_t seed = 0;

  friend bool operator==(const EstimateReport& a, const EstimateReport& b) {
    return a.n == b.n && a.m == b.m && a.trials == b.trials && a.hits == b.hits && a.estimate == b.estimate &&
           a.interval.low == b.interval.low && a.interval.high == b.interval.high && a.seed == b.seed;
  }
};

struct EstimateOptions {
  /// Redraw until the m points are pairwise distinct (pure fixed-set model).
  bool distinct_only = false;
  /// Use all 2^n points instead of m random ones; m must equal 2^n.
  bool full_cube = false;
  /// Worker threads; results do not depend on this.
  std::size_t workers = 1;
};

/// Trial t draws, from Rng(derive_seed(seed, t)), m uniform points of
/// {0,1}^n and then one fair label per point, and counts a hit when the
/// resulting dichotomy is separable. A point drawn twice with both labels
/// makes that trial inseparable.
EstimateReport estimate_separability_probability(std::size_t n, std::size_t m, std::uint64_t trials,
                                                 std::uint64_t seed, const EstimateOptions& options = {});

/// One report per ratio, with m = ceil(ratio * n), every row using `seed`.
std::vector<EstimateReport> phase_transition_sweep(std::size_t n, std::span<const Rational> ratios,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   const EstimateOptions& options = {});

/// CSV with header "n,m,trials,hits,estimate,ci_low,ci_high,seed"; the
/// estimate and interval are printed with 6 decimals.
std::string reports_to_csv(std::span<const EstimateReport> reports);

}  // namespace mpsep
