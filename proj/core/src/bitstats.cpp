#include "mpsep/bitstats.hpp"

#include <array>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

#include "mpsep/random.hpp"

namespace mpsep {

namespace {

TestResult finish(std::string name, double statistic, double p, double alpha) {
  p = std::clamp(p, 0.0, 1.0);
  return TestResult{std::move(name), statistic, p, true, alpha <= p && p <= 1.0 - alpha};
}

TestResult not_applicable(std::string name) { return TestResult{std::move(name), 0.0, 0.0, false, false}; }

std::size_t ones(std::span<const std::uint8_t> s) {
  std::size_t count = 0;
  for (auto b : s) count += b != 0 ? 1 : 0;
  return count;
}

// psi^2_m over overlapping m-bit patterns with cyclic wrap (m in {1, 2}).
double psi_squared(std::span<const std::uint8_t> s, unsigned m) {
  const std::size_t n = s.size();
  std::array<double, 4> counts{};
  for (std::size_t i = 0; i < n; ++i) {
    unsigned pattern = 0;
    for (unsigned k = 0; k < m; ++k) pattern = (pattern << 1) | (s[(i + k) % n] != 0 ? 1U : 0U);
    counts[pattern] += 1;
  }
  double sum = 0.0;
  for (unsigned p = 0; p < (1U << m); ++p) sum += counts[p] * counts[p];
  const double dn = static_cast<double>(n);
  return static_cast<double>(1U << m) / dn * sum - dn;
}

}  // namespace

std::size_t BatteryReport::passed() const noexcept {
  std::size_t count = 0;
  for (const auto& r : results) count += r.applicable && r.pass ? 1 : 0;
  return count;
}

BitStream reference_stream(std::uint64_t seed, std::size_t len) {
  Rng rng(seed);
  BitStream out(len);
  for (std::size_t base = 0; base < len; base += 64) {
    const std::uint64_t word = rng.next_u64();
    for (std::size_t k = 0; k < 64 && base + k < len; ++k) out[base + k] = (word >> (63 - k)) & 1U;
  }
  return out;
}

double gamma_upper_regularized(double a, double x) {
  if (x <= 0) return 1.0;
  return boost::math::gamma_q(a, x);
}

TestResult monobit(std::span<const std::uint8_t> stream, double alpha) {
  if (stream.size() < kMinStreamLength) return not_applicable("monobit");
  const double n = static_cast<double>(stream.size());
  const double s = 2.0 * static_cast<double>(ones(stream)) - n;
  const double statistic = std::fabs(s) / std::sqrt(n);
  return finish("monobit", statistic, std::erfc(statistic / std::sqrt(2.0)), alpha);
}

TestResult block_frequency(std::span<const std::uint8_t> stream, std::size_t block_len, double alpha) {
  if (block_len == 0) throw std::invalid_argument("block_len must be positive");
  const std::size_t blocks = stream.size() / block_len;
  if (stream.size() < kMinStreamLength || blocks == 0) return not_applicable("block_frequency");
  double chi2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const double pi = static_cast<double>(ones(stream.subspan(b * block_len, block_len))) / static_cast<double>(block_len);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block_len);
  return finish("block_frequency", chi2, gamma_upper_regularized(static_cast<double>(blocks) / 2.0, chi2 / 2.0), alpha);
}

TestResult runs_test(std::span<const std::uint8_t> stream, double alpha) {
  if (stream.size() < kMinStreamLength) return not_applicable("runs");
  const double n = static_cast<double>(stream.size());
  const double pi = static_cast<double>(ones(stream)) / n;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < stream.size(); ++i) runs += (stream[i] != 0) != (stream[i - 1] != 0) ? 1 : 0;
  const double v = static_cast<double>(runs);
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) return finish("runs", v, 0.0, alpha);
  const double q = pi * (1.0 - pi);
  const double p = std::erfc(std::fabs(v - 2.0 * n * q) / (2.0 * std::sqrt(2.0 * n) * q));
  return finish("runs", v, p, alpha);
}

TestResult serial_pairs(std::span<const std::uint8_t> stream, double alpha) {
  if (stream.size() < kMinStreamLength) return not_applicable("serial_pairs");
  const double del = psi_squared(stream, 2) - psi_squared(stream, 1);
  return finish("serial_pairs", del, gamma_upper_regularized(1.0, del / 2.0), alpha);
}

TestResult autocorrelation(std::span<const std::uint8_t> stream, std::size_t lag, double alpha) {
  if (lag == 0) throw std::invalid_argument("autocorrelation lag must be positive");
  if (stream.size() < kMinStreamLength || stream.size() <= lag + 1) return not_applicable("autocorrelation");
  const std::size_t pairs = stream.size() - lag;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < pairs; ++i) disagreements += (stream[i] != 0) != (stream[i + lag] != 0) ? 1 : 0;
  const double dp = static_cast<double>(pairs);
  const double z = 2.0 * (static_cast<double>(disagreements) - dp / 2.0) / std::sqrt(dp);
  return finish("autocorrelation", z, std::erfc(std::fabs(z) / std::sqrt(2.0)), alpha);
}

BatteryReport run_battery(std::span<const std::uint8_t> stream, const BatteryConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 0.5)) throw std::invalid_argument("alpha must lie in (0, 0.5)");
  BatteryReport report;
  report.length = stream.size();
  report.config = config;
  report.results.push_back(monobit(stream, config.alpha));
  report.results.push_back(block_frequency(stream, config.block_len, config.alpha));
  report.results.push_back(runs_test(stream, config.alpha));
  report.results.push_back(serial_pairs(stream, config.alpha));
  report.results.push_back(autocorrelation(stream, config.lag, config.alpha));
  bool any = false;
  bool all = true;
  for (const auto& r : report.results) {
    if (!r.applicable) continue;
    any = true;
    all = all && r.pass;
  }
  report.pass = any && all;
  return report;
}

}  // namespace mpsep
