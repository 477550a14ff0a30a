#include "mpsep/distinguisher.hpp"

#include <stdexcept>

#include "mpsep/errors.hpp"
#include "mpsep/random.hpp"

namespace mpsep {

std::string_view message(Label label) noexcept {
  return label == Label::kMcCullochPitts ? "McCulloch-Pitts" : "not McCulloch-Pitts";
}

std::variant<Dichotomy, Dichotomy::Conflict> bit_dichotomy(const Trace& trace, std::size_t position) {
  const std::size_t n = trace.width();
  if (position == 0 || position > n) {
    throw std::out_of_range("bit position " + std::to_string(position) + " outside 1.." + std::to_string(n));
  }
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (const auto& [x, y] : trace.pairs()) (y.bit(position - 1) ? pos : neg).push_back(x);
  return Dichotomy::make(n, std::move(pos), std::move(neg));
}

namespace {

Verdict test_positions(const Trace& trace, std::size_t count) {
  Verdict v;
  for (std::size_t j = 1; j <= count; ++j) {
    auto built = bit_dichotomy(trace, j);
    if (auto* conflict = std::get_if<Dichotomy::Conflict>(&built)) {
      v.label = Label::kNotMcCullochPitts;
      v.failing_position = j;
      v.failure = std::move(*conflict);
      v.separators.clear();
      return v;
    }
    auto result = decide_separable(std::get<Dichotomy>(built));
    if (!result.separable()) {
      v.label = Label::kNotMcCullochPitts;
      v.failing_position = j;
      v.failure = result.hull_witness();
      v.separators.clear();
      return v;
    }
    v.separators.push_back(result.separator());
  }
  return v;
}

}  // namespace

Verdict distinguish(const Trace& trace) { return test_positions(trace, 1); }

Verdict distinguish_refined(const Trace& trace) { return test_positions(trace, trace.width()); }

bool verify_verdict(const Trace& trace, const Verdict& verdict) {
  if (verdict.label == Label::kMcCullochPitts) {
    if (verdict.separators.empty() || verdict.separators.size() > trace.width()) return false;
    for (std::size_t j = 1; j <= verdict.separators.size(); ++j) {
      const auto built = bit_dichotomy(trace, j);
      const auto* d = std::get_if<Dichotomy>(&built);
      if (d == nullptr || !verify_separator(*d, verdict.separators[j - 1])) return false;
    }
    return true;
  }
  if (verdict.failing_position == 0 || verdict.failing_position > trace.width()) return false;
  const auto built = bit_dichotomy(trace, verdict.failing_position);
  if (const auto* conflict = std::get_if<Dichotomy::Conflict>(&verdict.failure)) {
    // The point must occur in the trace with both values of the bit.
    bool one = false;
    bool zero = false;
    for (const auto& [x, y] : trace.pairs()) {
      if (x == conflict->point) (y.bit(verdict.failing_position - 1) ? one : zero) = true;
    }
    return one && zero;
  }
  const auto* witness = std::get_if<HullWitness>(&verdict.failure);
  const auto* d = std::get_if<Dichotomy>(&built);
  return witness != nullptr && d != nullptr && verify_hull_witness(*d, *witness);
}

Trace generate_mp_trace(const MPSystem& system, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("trace length m must be at least 1");
  Rng xs(derive_seed(seed, 0));
  std::vector<SamplePair> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    BitVec x = xs.bits(system.dimension());
    BitVec y = apply_system(system, x);
    pairs.push_back({std::move(x), std::move(y)});
  }
  return Trace(std::move(pairs));
}

Trace generate_random_trace(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("trace length m must be at least 1");
  if (n == 0) throw DimensionError("trace width n must be positive");
  Rng xs(derive_seed(seed, 0));
  Rng ys(derive_seed(seed, 1));
  std::vector<SamplePair> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    BitVec x = xs.bits(n);
    BitVec y = ys.bits(n);
    pairs.push_back({std::move(x), std::move(y)});
  }
  return Trace(std::move(pairs));
}

}  // namespace mpsep
