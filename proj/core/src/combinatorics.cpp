#include "mpsep/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "mpsep/errors.hpp"
#include "mpsep/random.hpp"

namespace mpsep {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt binomial_prefix_sum(std::uint64_t n, std::uint64_t upto) {
  BigInt sum = 0;
  const auto last = std::min(n, upto);
  for (std::uint64_t i = 0; i <= last; ++i) sum += binomial(n, i);
  return sum;
}

BigInt power_of_two(std::uint64_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

// Runs body(t) for t in [0, trials), spread over `workers` threads, and
// returns the number of trials for which body returned true.
template <typename Body>
std::uint64_t count_hits(std::uint64_t trials, std::size_t workers, const Body& body) {
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, trials));
  if (workers == 1) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) hits += body(t) ? 1 : 0;
    return hits;
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t t = w; t < trials; t += workers) partial[w] += body(t) ? 1 : 0;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t hits = 0;
  for (auto h : partial) hits += h;
  return hits;
}

}  // namespace

BigInt cover_bound(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("cover_bound needs m >= 1");
  return 2 * binomial_prefix_sum(m - 1, n);
}

BigInt sauer_shelah_bound(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("sauer_shelah_bound needs m >= 1");
  return 2 * binomial_prefix_sum(m, n + 1);
}

Rational probability_bound(std::uint64_t m, std::uint64_t n) {
  Rational p(cover_bound(m, n), power_of_two(m));
  p.canonicalize();
  return p > 1 ? Rational(1) : p;
}

Rational distinct_probability(std::uint64_t m, std::uint64_t n) {
  if (n < 64 && m > (std::uint64_t{1} << n)) return Rational(0);
  const BigInt cube = power_of_two(n);
  BigInt num = 1;
  for (std::uint64_t i = 0; i < m; ++i) num *= cube - i;
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), cube.get_mpz_t(), m);
  Rational p(num, den);
  p.canonicalize();
  return p;
}

BigInt count_separable(std::span<const BitVec> points, std::size_t max_points) {
  std::vector<BitVec> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() > max_points) {
    throw GuardError("count_separable: " + std::to_string(distinct.size()) + " points exceed the brute-force limit of " +
                     std::to_string(max_points));
  }
  if (distinct.size() >= 63) throw GuardError("count_separable: too many points to enumerate");
  if (distinct.empty()) return 1;
  const std::size_t width = distinct.front().width();
  const std::uint64_t labelings = std::uint64_t{1} << distinct.size();
  BigInt count = 0;
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (std::uint64_t mask = 0; mask < labelings; ++mask) {
    pos.clear();
    neg.clear();
    for (std::size_t i = 0; i < distinct.size(); ++i) ((mask >> i) & 1U ? pos : neg).push_back(distinct[i]);
    if (decide_separable(Dichotomy::make_disjoint(width, pos, neg)).separable()) ++count;
  }
  return count;
}

std::vector<BitVec> full_cube(std::size_t n) {
  if (n == 0 || n > 20) throw GuardError("full_cube supports 1 <= n <= 20");
  std::vector<BitVec> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) out.push_back(BitVec::from_u64(v, n));
  return out;
}

ConfidenceInterval wilson_interval(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson_interval needs trials >= 1");
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / nt;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * nt)) / (1 + z2 / nt);
  const double half = z * std::sqrt(p * (1 - p) / nt + z2 / (4 * nt * nt)) / (1 + z2 / nt);
  ConfidenceInterval ci{std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

EstimateReport estimate_separability_probability(std::size_t n, std::size_t m, std::uint64_t trials,
                                                 std::uint64_t seed, const EstimateOptions& options) {
  if (trials == 0) throw std::invalid_argument("estimate needs trials >= 1");
  if (n == 0) throw DimensionError("estimate needs n >= 1");
  if (m == 0) throw std::invalid_argument("estimate needs m >= 1");
  std::vector<BitVec> cube;
  if (options.full_cube) {
    cube = full_cube(n);
    if (m != cube.size()) {
      throw std::invalid_argument("full-cube mode needs m = 2^n = " + std::to_string(cube.size()));
    }
  }
  if (options.distinct_only && n < 64 && m > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("cannot draw " + std::to_string(m) + " distinct points from {0,1}^" +
                                std::to_string(n));
  }

  const auto trial = [&](std::uint64_t t) {
    Rng rng(derive_seed(seed, t));
    std::vector<BitVec> points;
    if (options.full_cube) {
      points = cube;
    } else {
      points.reserve(m);
      while (points.size() < m) {
        BitVec x = rng.bits(n);
        if (options.distinct_only && std::find(points.begin(), points.end(), x) != points.end()) continue;
        points.push_back(std::move(x));
      }
    }
    std::vector<bool> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = rng.coin();
    const auto built = Dichotomy::from_labels(n, points, labels);
    const auto* d = std::get_if<Dichotomy>(&built);
    return d != nullptr && decide_separable(*d).separable();
  };

  EstimateReport report;
  report.n = n;
  report.m = m;
  report.trials = trials;
  report.seed = seed;
  report.hits = count_hits(trials, options.workers, trial);
  report.estimate = Rational(BigInt(std::to_string(report.hits)), BigInt(std::to_string(trials)));
  report.estimate.canonicalize();
  report.interval = wilson_interval(report.hits, trials);
  return report;
}

std::vector<EstimateReport> phase_transition_sweep(std::size_t n, std::span<const Rational> ratios,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   const EstimateOptions& options) {
  std::vector<EstimateReport> out;
  out.reserve(ratios.size());
  for (const auto& ratio : ratios) {
    if (ratio <= 0) throw std::invalid_argument("sweep ratios must be positive");
    BigInt m;
    const Rational scaled = ratio * Rational(BigInt(std::to_string(n)));
    mpz_cdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (!m.fits_ulong_p()) throw std::invalid_argument("sweep ratio too large");
    out.push_back(estimate_separability_probability(n, m.get_ui(), trials, seed, options));
  }
  return out;
}

std::string reports_to_csv(std::span<const EstimateReport> reports) {
  std::string out = "n,m,trials,hits,estimate,ci_low,ci_high,seed\n";
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%llu,%llu,%.6f,%.6f,%.6f,%llu\n", r.n, r.m,
                  static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.hits),
                  r.estimate.get_d(), r.interval.low, r.interval.high, static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

}  // namespace mpsep
