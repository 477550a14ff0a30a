#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpsep {

/// A bit stream, one 0/1 value per element.
using BitStream = std::vector<std::uint8_t>;

struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 0.0;
  /// False when the stream is too short for the test; such a result never
  /// counts toward the battery verdict.
  bool applicable = true;
  bool pass = false;
};

struct BatteryConfig {
  double alpha = 0.01;
  std::size_t block_len = 128;
  std::size_t lag = 1;
};

struct BatteryReport {
  std::size_t length = 0;
  BatteryConfig config;
  std::vector<TestResult> results;
  /// Every applicable test passed (and at least one was applicable).
  bool pass = false;

  std::size_t passed() const noexcept;
};

/// Minimum stream length for every test in the battery.
constexpr std::size_t kMinStreamLength = 100;

// Each test sets pass to alpha <= p <= 1 - alpha.

/// statistic |#1 - #0| / sqrt(len), p = erfc(statistic / sqrt 2).
TestResult monobit(std::span<const std::uint8_t> stream, double alpha = 0.01);
/// chi^2 = 4 M sum (pi_i - 1/2)^2 over N = floor(len / M) blocks, N degrees of freedom.
TestResult block_frequency(std::span<const std::uint8_t> stream, std::size_t block_len, double alpha = 0.01);
/// Total runs V against 2 len pi (1 - pi); fails outright (p = 0) when the
/// one-fraction pi is further than 2 / sqrt(len) from 1/2.
TestResult runs_test(std::span<const std::uint8_t> stream, double alpha = 0.01);
/// Overlapping-pattern serial statistic del psi^2 = psi^2_2 - psi^2_1 with
/// cyclic wrap, chi-square with 2 degrees of freedom.
TestResult serial_pairs(std::span<const std::uint8_t> stream, double alpha = 0.01);
/// Disagreements A at distance `lag`; z = 2 (A - (len - lag) / 2) / sqrt(len - lag), p = erfc(|z| / sqrt 2).
TestResult autocorrelation(std::span<const std::uint8_t> stream, std::size_t lag, double alpha = 0.01);

/// Runs the five tests above. Throws std::invalid_argument unless 0 < alpha < 0.5.
BatteryReport run_battery(std::span<const std::uint8_t> stream, const BatteryConfig& config = {});

/// `len` bits of Rng(seed), each 64-bit draw read most significant bit first.
BitStream reference_stream(std::uint64_t seed, std::size_t len);

/// Upper regularized incomplete gamma Q(a, x), the chi-square tail for 2a degrees of freedom at 2x.
double gamma_upper_regularized(double a, double x);

}  // namespace mpsep
