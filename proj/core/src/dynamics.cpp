#include "mpsep/dynamics.hpp"

#include <string>

#include "mpsep/errors.hpp"
#include "mpsep/random.hpp"

namespace mpsep {

namespace {

void check_width(const MPSystem& system, const BitVec& x) {
  if (x.width() != system.dimension()) {
    throw DimensionError("start state width " + std::to_string(x.width()) + " does not match system dimension " +
                         std::to_string(system.dimension()));
  }
}

template <typename State, typename Step>
std::optional<CycleInfo> brent(const State& start, const Step& step, std::uint64_t budget) {
  std::uint64_t evaluations = 0;
  std::uint64_t power = 1;
  std::uint64_t period = 1;
  State tortoise = start;
  State hare = step(start);
  ++evaluations;
  while (!(tortoise == hare)) {
    if (evaluations >= budget) return std::nullopt;
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = step(hare);
    ++evaluations;
    ++period;
  }
  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < period; ++i) hare = step(hare);
  std::uint64_t tail = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++tail;
  }
  return CycleInfo{tail, period};
}

// Re-simulates: x_{tail+period} == x_tail, the tail cannot be shortened, and
// no proper divisor of the period closes the cycle.
template <typename State, typename Step>
bool confirm_cycle(const State& start, const Step& step, const CycleInfo& c) {
  State before_tail = start;
  State at_tail = start;
  for (std::uint64_t i = 0; i < c.tail; ++i) {
    before_tail = at_tail;
    at_tail = step(at_tail);
  }
  State x = at_tail;
  State before_end = before_tail;
  for (std::uint64_t i = 1; i <= c.period; ++i) {
    x = step(x);
    if (c.tail > 0) before_end = step(before_end);
    if (i < c.period && x == at_tail) return false;
  }
  if (!(x == at_tail)) return false;
  return c.tail == 0 || !(before_end == before_tail);
}

}  // namespace

std::vector<BitVec> trajectory(const MPSystem& system, const BitVec& start, std::size_t steps) {
  check_width(system, start);
  std::vector<BitVec> out;
  out.reserve(steps + 1);
  out.push_back(start);
  for (std::size_t t = 0; t < steps; ++t) out.push_back(apply_system(system, out.back()));
  return out;
}

BitVec prefix_projection(const MPSystem& system, const BitVec& x, std::size_t m) {
  if (m == 0 || m > system.dimension()) {
    throw std::invalid_argument("prefix length must lie in [1, " + std::to_string(system.dimension()) + "]");
  }
  return apply_system(system, x).prefix(m);
}

BitStream first_bit_stream(const MPSystem& system, const BitVec& start, std::size_t steps) {
  check_width(system, start);
  BitStream out(steps);
  if (system.has_fast_path()) {
    const unsigned top = static_cast<unsigned>(system.dimension() - 1);
    std::uint64_t state = start.to_u64();
    for (std::size_t t = 0; t < steps; ++t) {
      state = system.step_packed(state);
      out[t] = static_cast<std::uint8_t>((state >> top) & 1U);
    }
    return out;
  }
  BitVec state = start;
  for (std::size_t t = 0; t < steps; ++t) {
    state = apply_system(system, state);
    out[t] = state.bit(0) ? 1 : 0;
  }
  return out;
}

CycleInfo find_cycle(const MPSystem& system, const BitVec& start, std::uint64_t budget) {
  check_width(system, start);
  if (budget == 0) throw std::invalid_argument("cycle budget must be at least 1");
  std::optional<CycleInfo> found;
  bool confirmed = false;
  if (system.has_fast_path()) {
    const auto step = [&](std::uint64_t s) { return system.step_packed(s); };
    found = brent(start.to_u64(), step, budget);
    confirmed = found && confirm_cycle(start.to_u64(), step, *found);
  } else {
    const auto step = [&](const BitVec& s) { return apply_system(system, s); };
    found = brent(start, step, budget);
    confirmed = found && confirm_cycle(start, step, *found);
  }
  if (!found) throw BudgetExhausted("no cycle within " + std::to_string(budget) + " steps");
  if (!confirmed) throw std::logic_error("cycle re-simulation disagreed with Brent's search");
  return *found;
}

MPSystem random_system(const SystemGenSpec& spec) {
  if (spec.n == 0) throw DimensionError("system dimension must be positive");
  if (spec.weight_low > spec.weight_high || spec.theta_low > spec.theta_high) {
    throw std::invalid_argument("sampling ranges need low <= high");
  }
  Rng rng(spec.seed);
  std::vector<ThresholdUnit> units(spec.n);
  for (auto& u : units) {
    u.weights.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
      u.weights.emplace_back(static_cast<long>(rng.uniform_int(spec.weight_low, spec.weight_high)));
    }
    u.theta = static_cast<long>(rng.uniform_int(spec.theta_low, spec.theta_high));
  }
  return MPSystem(std::move(units));
}

namespace {

bool ranks_above(const Candidate& a, const Candidate& b) {
  if (a.passed != b.passed) return a.passed > b.passed;
  if (a.cycle.has_value() != b.cycle.has_value()) return !a.cycle.has_value();
  if (a.cycle && a.cycle->period != b.cycle->period) return a.cycle->period > b.cycle->period;
  return a.attempt < b.attempt;
}

SystemGenSpec gen_spec(const SearchConfig& config, std::uint64_t seed) {
  return SystemGenSpec{config.n, config.weight_low, config.weight_high, config.theta_low, config.theta_high, seed};
}

}  // namespace

SearchReport search_pseudorandom_system(const SearchConfig& config) {
  if (config.attempts == 0) throw std::invalid_argument("search needs at least one attempt");
  if (config.n == 0) throw DimensionError("search dimension must be positive");
  std::vector<Candidate> candidates;
  candidates.reserve(config.attempts);
  std::size_t best = 0;
  std::optional<BatteryReport> best_battery;
  for (std::size_t a = 0; a < config.attempts; ++a) {
    Rng rng(derive_seed(config.seed, a));
    Candidate c;
    c.attempt = a;
    c.system_seed = rng.next_u64();
    c.start = rng.bits(config.n);
    const MPSystem system = random_system(gen_spec(config, c.system_seed));
    BatteryReport battery = run_battery(first_bit_stream(system, c.start, config.stream_len), config.battery);
    c.passed = battery.passed();
    try {
      c.cycle = find_cycle(system, c.start, config.cycle_budget);
    } catch (const BudgetExhausted&) {
      c.cycle.reset();
    }
    candidates.push_back(std::move(c));
    if (a == 0 || ranks_above(candidates.back(), candidates[best])) {
      best = a;
      best_battery = std::move(battery);
    }
  }
  MPSystem best_system = random_system(gen_spec(config, candidates[best].system_seed));
  return SearchReport{config, std::move(candidates), best, std::move(best_system), std::move(*best_battery)};
}

}  // namespace mpsep
