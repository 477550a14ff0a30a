#include "mpsep/model.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "mpsep/errors.hpp"

namespace mpsep {

bool evaluate_unit(const ThresholdUnit& unit, const BitVec& x) {
  if (unit.arity() != x.width()) {
    throw DimensionError("unit arity " + std::to_string(unit.arity()) + " does not match input width " +
                         std::to_string(x.width()));
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < x.width(); ++j) {
    if (x.bit(j)) sum += unit.weights[j];
  }
  return sum >= unit.theta;
}

namespace {

// Magnitude limit for compiled weights; n <= 64 terms then cannot overflow int64.
constexpr long kFastLimit = 1L << 52;

bool fits(const BigInt& v) { return v.fits_slong_p() && v.get_si() > -kFastLimit && v.get_si() < kFastLimit; }

}  // namespace

MPSystem::MPSystem(std::vector<ThresholdUnit> units) : units_(std::move(units)) {
  const std::size_t n = units_.size();
  if (n == 0) throw DimensionError("a McCulloch-Pitts system needs at least one unit");
  for (std::size_t j = 0; j < n; ++j) {
    if (units_[j].arity() != n) {
      throw DimensionError("unit " + std::to_string(j + 1) + " has arity " + std::to_string(units_[j].arity()) +
                           ", expected " + std::to_string(n));
    }
  }
  if (n > 64) return;

  std::vector<FastUnit> compiled;
  compiled.reserve(n);
  for (const auto& u : units_) {
    // Positive rescaling by the lcm of denominators leaves every output unchanged.
    BigInt scale = u.theta.get_den();
    for (const auto& w : u.weights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den().get_mpz_t());
    FastUnit fu{std::vector<std::int64_t>(n), 0};
    BigInt abs_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt w = u.weights[i].get_num() * (scale / u.weights[i].get_den());
      if (!fits(w)) return;
      abs_total += abs(w);
      fu.weights[n - 1 - i] = w.get_si();
    }
    const BigInt t = u.theta.get_num() * (scale / u.theta.get_den());
    if (!fits(t) || !fits(abs_total)) return;
    fu.theta = t.get_si();
    compiled.push_back(std::move(fu));
  }
  fast_ = std::move(compiled);
}

std::uint64_t MPSystem::step_packed(std::uint64_t state) const {
  if (!fast_) throw std::logic_error("step_packed called on a system without an integer form");
  const std::size_t n = units_.size();
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& fu = (*fast_)[j];
    std::int64_t sum = 0;
    for (std::uint64_t s = state; s != 0; s &= s - 1) sum += fu.weights[static_cast<std::size_t>(std::countr_zero(s))];
    if (sum >= fu.theta) out |= std::uint64_t{1} << (n - 1 - j);
  }
  return out;
}

BitVec apply_system(const MPSystem& system, const BitVec& x) {
  const std::size_t n = system.dimension();
  if (x.width() != n) {
    throw DimensionError("state width " + std::to_string(x.width()) + " does not match system dimension " +
                         std::to_string(n));
  }
  if (system.has_fast_path()) return BitVec::from_u64(system.step_packed(x.to_u64()), n);
  BitVec out(n);
  for (std::size_t j = 0; j < n; ++j) out.set(j, evaluate_unit(system.unit(j), x));
  return out;
}

namespace {

void normalize_side(std::size_t width, std::vector<BitVec>& side) {
  for (const auto& p : side) {
    if (p.width() != width) {
      throw DimensionError("point " + p.to_string() + " has width " + std::to_string(p.width()) + ", expected " +
                           std::to_string(width));
    }
  }
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
}

}  // namespace

std::variant<Dichotomy, Dichotomy::Conflict> Dichotomy::make(std::size_t width, std::vector<BitVec> positives,
                                                             std::vector<BitVec> negatives) {
  if (width == 0) throw DimensionError("dichotomy width must be positive");
  normalize_side(width, positives);
  normalize_side(width, negatives);
  std::vector<BitVec> common;
  std::set_intersection(positives.begin(), positives.end(), negatives.begin(), negatives.end(),
                        std::back_inserter(common));
  if (!common.empty()) return Conflict{common.front()};
  return Dichotomy(width, std::move(positives), std::move(negatives));
}

Dichotomy Dichotomy::make_disjoint(std::size_t width, std::vector<BitVec> positives, std::vector<BitVec> negatives) {
  auto result = make(width, std::move(positives), std::move(negatives));
  if (auto* c = std::get_if<Conflict>(&result)) {
    throw std::invalid_argument("point " + c->point.to_string() + " is on both sides of the dichotomy");
  }
  return std::get<Dichotomy>(std::move(result));
}

std::variant<Dichotomy, Dichotomy::Conflict> Dichotomy::from_labels(std::size_t width, std::span<const BitVec> points,
                                                                    const std::vector<bool>& labels) {
  if (points.size() != labels.size()) throw std::invalid_argument("points and labels differ in length");
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (std::size_t i = 0; i < points.size(); ++i) (labels[i] ? pos : neg).push_back(points[i]);
  return make(width, std::move(pos), std::move(neg));
}

Dichotomy Dichotomy::swapped() const { return Dichotomy(width_, negatives_, positives_); }

Trace::Trace(std::vector<SamplePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("a trace needs at least one pair");
  const std::size_t n = pairs_.front().x.width();
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].x.width() != n || pairs_[i].y.width() != n) {
      throw DimensionError("pair " + std::to_string(i + 1) + " does not have width " + std::to_string(n));
    }
  }
}

}  // namespace mpsep
