#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "mpsep/dynamics.hpp"
#include "mpsep/errors.hpp"
#include "mpsep_cli/formats.hpp"
#include "test_support.hpp"

namespace mpsep {
namespace {

using testing::bits;

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(MPSEP_TEST_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Successor table built unit by unit through evaluate_unit.
std::vector<std::uint64_t> successor_table(const MPSystem& sys) {
  const std::size_t n = sys.dimension();
  std::vector<std::uint64_t> next(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < next.size(); ++s) {
    const BitVec x = BitVec::from_u64(s, n);
    std::uint64_t y = 0;
    for (std::size_t j = 0; j < n; ++j) y = (y << 1) | (evaluate_unit(sys.unit(j), x) ? 1U : 0U);
    next[s] = y;
  }
  return next;
}

CycleInfo walk(const std::vector<std::uint64_t>& next, std::uint64_t start) {
  std::vector<std::int64_t> seen(next.size(), -1);
  std::uint64_t s = start;
  for (std::int64_t t = 0;; ++t) {
    if (seen[s] >= 0) {
      return CycleInfo{static_cast<std::uint64_t>(seen[s]), static_cast<std::uint64_t>(t - seen[s])};
    }
    seen[s] = t;
    s = next[s];
  }
}

TEST(FindCycle, FixedPointsAndShifts) {
  EXPECT_EQ(find_cycle(testing::identity_system(5), bits("10110"), 100), (CycleInfo{0, 1}));
  EXPECT_EQ(find_cycle(testing::constant_ones_system(4), bits("0000"), 100), (CycleInfo{1, 1}));
  EXPECT_EQ(find_cycle(testing::constant_ones_system(4), bits("1111"), 100), (CycleInfo{0, 1}));
  EXPECT_EQ(find_cycle(testing::cyclic_shift_system(3), bits("100"), 100), (CycleInfo{0, 3}));
  EXPECT_EQ(find_cycle(testing::cyclic_shift_system(6), bits("101010"), 100), (CycleInfo{0, 2}));
  EXPECT_EQ(find_cycle(testing::cyclic_shift_system(6), bits("100100"), 100), (CycleInfo{0, 3}));
}

TEST(FindCycle, BudgetExhaustion) {
  EXPECT_THROW(find_cycle(testing::cyclic_shift_system(20), bits("10000000000000000000"), 5), BudgetExhausted);
  EXPECT_THROW(find_cycle(testing::identity_system(3), bits("00"), 5), DimensionError);
}

TEST(FindCycle, MatchesExhaustiveWalkForSmallSystems) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto sys = random_system(SystemGenSpec{n, -4, 4, -4, 4, seed});
    const auto next = successor_table(sys);
    Rng rng(seed);
    for (int k = 0; k < 16; ++k) {
      const std::uint64_t s = rng.below(next.size());
      EXPECT_EQ(find_cycle(sys, BitVec::from_u64(s, n), 1U << 14), walk(next, s)) << "seed " << seed;
    }
  }
}

TEST(FindCycle, AgreesWithoutFastPath) {
  const auto shift = testing::cyclic_shift_system(70);
  ASSERT_FALSE(shift.has_fast_path());
  BitVec start(70);
  start.set(0, true);
  start.set(3, true);
  EXPECT_EQ(find_cycle(shift, start, 1000), (CycleInfo{0, 70}));
}

TEST(Trajectory, StepsAndProjection) {
  const auto sys = testing::cyclic_shift_system(4);
  const auto tr = trajectory(sys, bits("1000"), 4);
  ASSERT_EQ(tr.size(), 5U);
  EXPECT_EQ(tr[1], bits("0100"));
  EXPECT_EQ(tr[4], bits("1000"));
  EXPECT_EQ(prefix_projection(sys, bits("1000"), 2), bits("01"));
  EXPECT_THROW(prefix_projection(sys, bits("1000"), 0), std::invalid_argument);
  EXPECT_THROW(prefix_projection(sys, bits("1000"), 5), std::invalid_argument);
}

TEST(FirstBitStream, MatchesTrajectory) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sys = random_system(SystemGenSpec{9, -8, 8, -8, 8, seed});
    Rng rng(seed);
    const BitVec start = rng.bits(9);
    const auto tr = trajectory(sys, start, 200);
    const auto stream = first_bit_stream(sys, start, 200);
    for (std::size_t t = 1; t <= 200; ++t) {
      ASSERT_EQ(stream[t - 1], tr[t].bit(0) ? 1 : 0);
      ASSERT_EQ(prefix_projection(sys, tr[t - 1], 1), tr[t].prefix(1));
    }
  }
}

TEST(RandomSystem, RangesAndDeterminism) {
  const SystemGenSpec spec{7, -2, 3, 0, 1, 42};
  const auto a = random_system(spec);
  EXPECT_EQ(a, random_system(spec));
  for (const auto& u : a.units()) {
    for (const auto& w : u.weights) {
      EXPECT_GE(w, -2);
      EXPECT_LE(w, 3);
    }
    EXPECT_GE(u.theta, 0);
    EXPECT_LE(u.theta, 1);
  }
  // Every value in the range shows up across many draws.
  const auto big = random_system(SystemGenSpec{30, -2, 3, 0, 1, 43});
  std::set<long> values;
  for (const auto& u : big.units()) {
    for (const auto& w : u.weights) values.insert(w.get_num().get_si());
  }
  EXPECT_EQ(values.size(), 6U);
}

TEST(RandomSystem, MatchesGoldenFiles) {
  const auto sys = random_system(SystemGenSpec{6, -8, 8, -8, 8, 99});
  EXPECT_EQ(cli::print_system(sys), read_file("golden_system_n6.json"));
  std::string lines;
  for (const auto& x : trajectory(sys, bits("101100"), 20)) lines += x.to_string() + "\n";
  EXPECT_EQ(lines, read_file("golden_trajectory_n6_seed99.txt"));
}

TEST(Search, SmallRunIsDeterministicAndRanked) {
  SearchConfig cfg;
  cfg.n = 12;
  cfg.stream_len = 2000;
  cfg.attempts = 6;
  cfg.seed = 3;
  cfg.cycle_budget = 1U << 14;
  const auto a = search_pseudorandom_system(cfg);
  const auto b = search_pseudorandom_system(cfg);
  ASSERT_EQ(a.candidates.size(), 6U);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.best_system, b.best_system);
  const auto& best = a.candidates[a.best];
  for (const auto& c : a.candidates) EXPECT_LE(c.passed, best.passed);
  EXPECT_EQ(a.best_battery.passed(), best.passed);
  EXPECT_EQ(a.best_system, random_system(SystemGenSpec{12, -8, 8, -8, 8, best.system_seed}));
}

}  // namespace
}  // namespace mpsep
