#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "mpsep/model.hpp"
#include "mpsep/separability.hpp"

namespace mpsep {

enum class Label { kMcCullochPitts, kNotMcCullochPitts };

/// "McCulloch-Pitts" or "not McCulloch-Pitts".
std::string_view message(Label label) noexcept;

struct Verdict {
  Label label = Label::kMcCullochPitts;
  /// For McCulloch-Pitts: one separator per tested bit position, in order.
  std::vector<Separator> separators;
  /// For not McCulloch-Pitts: the 1-based bit position that failed, and
  /// either a hull witness for its dichotomy or a point seen with both labels.
  std::size_t failing_position = 0;
  std::variant<std::monostate, HullWitness, Dichotomy::Conflict> failure;
};

/// The dichotomy ({x^i : y^i_j = 1}, {x^i : y^i_j = 0}) for 1-based bit position j.
std::variant<Dichotomy, Dichotomy::Conflict> bit_dichotomy(const Trace& trace, std::size_t position);

/// Tests the first-bit dichotomy only.
Verdict distinguish(const Trace& trace);

/// Tests every bit position 1..n and stops at the first that fails.
Verdict distinguish_refined(const Trace& trace);

/// Checks that every piece of evidence in `verdict` verifies against the
/// dichotomy it concerns.
bool verify_verdict(const Trace& trace, const Verdict& verdict);

/// x^i uniform from {0,1}^n on the stream derive_seed(seed, 0); y^i = Phi(x^i).
Trace generate_mp_trace(const MPSystem& system, std::size_t m, std::uint64_t seed);

/// x^i on derive_seed(seed, 0), y^i on derive_seed(seed, 1), all uniform.
Trace generate_random_trace(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace mpsep
