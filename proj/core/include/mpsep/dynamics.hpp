#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mpsep/bitstats.hpp"
#include "mpsep/bitvec.hpp"
#include "mpsep/model.hpp"

namespace mpsep {

/// Phi^{tail+period}(x0) = Phi^{tail}(x0), both minimal.
struct CycleInfo {
  std::uint64_t tail = 0;
  std::uint64_t period = 1;
  friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (x0, Phi(x0), ..., Phi^T(x0)).
std::vector<BitVec> trajectory(const MPSystem& system, const BitVec& start, std::size_t steps);

/// First m bits of Phi(x), 1 <= m <= n.
BitVec prefix_projection(const MPSystem& system, const BitVec& x, std::size_t m);

/// Bit t-1 of the result is the first bit of Phi^t(x0), t = 1..T.
BitStream first_bit_stream(const MPSystem& system, const BitVec& start, std::size_t steps);

/// Brent's cycle finding; `budget` bounds the number of Phi evaluations in
/// the search. The answer is re-checked by simulation before returning.
/// Throws BudgetExhausted if no cycle closes within the budget.
CycleInfo find_cycle(const MPSystem& system, const BitVec& start, std::uint64_t budget);

struct SystemGenSpec {
  std::size_t n = 0;
  std::int64_t weight_low = -8;
  std::int64_t weight_high = 8;
  std::int64_t theta_low = -8;
  std::int64_t theta_high = 8;
  std::uint64_t seed = 0;
};

/// Unit by unit, n weights then theta, each uniform on its inclusive range,
/// drawn from Rng(spec.seed).
MPSystem random_system(const SystemGenSpec& spec);

struct SearchConfig {
  std::size_t n = 37;
  std::size_t stream_len = std::size_t{1} << 16;
  std::size_t attempts = 200;
  std::uint64_t seed = 0;
  std::int64_t weight_low = -8;
  std::int64_t weight_high = 8;
  std::int64_t theta_low = -8;
  std::int64_t theta_high = 8;
  BatteryConfig battery;
  /// Phi evaluations allowed for each attempt's cycle search; a cycle not
  /// closed within the budget ranks above every closed one.
  std::uint64_t cycle_budget = std::uint64_t{1} << 20;
};

struct Candidate {
  std::size_t attempt = 0;
  std::uint64_t system_seed = 0;
  BitVec start{1};
  std::size_t passed = 0;
  /// Empty when the cycle search ran out of budget.
  std::optional<CycleInfo> cycle;
};

struct SearchReport {
  SearchConfig config;
  std::vector<Candidate> candidates;
  std::size_t best = 0;  // index into candidates
  MPSystem best_system;
  BatteryReport best_battery;
};

/// Attempt a uses Rng(derive_seed(seed, a)): one draw for the system seed,
/// then the start state. Each stream is first_bit_stream(Phi, start,
/// stream_len). Candidates rank by tests passed, then period (an unclosed
/// cycle beats any closed one), then lowest attempt index.
SearchReport search_pseudorandom_system(const SearchConfig& config);

}  // namespace mpsep
