#include "mpsep/separability.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "mpsep/errors.hpp"

namespace mpsep {

namespace {

// Phase I tableau for  M u + a = b,  u, a >= 0,  minimize sum(a), kept in
// fraction-free form: every stored entry equals det * (B^-1 [M | I | b]),
// the objective row likewise. Rows 0..n-1 are the coordinates, row n the
// offset column, row n+1 the normalization sum(u) = 1.
class FarkasTableau {
 public:
  explicit FarkasTableau(const Dichotomy& d)
      : width_(d.width()),
        npoints_(d.size()),
        rows_(width_ + 2),
        cols_(npoints_ + rows_ + 1),
        rhs_(cols_ - 1),
        obj_(rows_),
        cells_((rows_ + 1) * cols_),
        basis_(rows_) {
    points_.reserve(npoints_);
    for (const auto& p : d.positives()) points_.push_back({&p, true});
    for (const auto& p : d.negatives()) points_.push_back({&p, false});

    for (std::size_t i = 0; i < npoints_; ++i) {
      const auto& [pt, positive] = points_[i];
      const long s = positive ? 1 : -1;
      long column_sum = 0;
      for (std::size_t k = 0; k < width_; ++k) {
        if (pt->bit(k)) {
          at(k, i) = s;
          column_sum += s;
        }
      }
      at(width_, i) = -s;
      at(width_ + 1, i) = 1;
      column_sum += 1 - s;
      at(obj_, i) = -column_sum;
    }
    for (std::size_t k = 0; k < rows_; ++k) {
      at(k, npoints_ + k) = 1;
      basis_[k] = npoints_ + k;
    }
    at(width_ + 1, rhs_) = 1;
    at(obj_, rhs_) = -1;
  }

  // Moves to the given basis by exact pivots. Returns false (tableau then
  // unusable) if the basis is singular or not primal feasible.
  bool crash(const std::vector<std::size_t>& target) {
    std::vector<bool> wanted(cols_, false);
    for (auto c : target) wanted[c] = true;
    for (auto c : target) {
      if (std::find(basis_.begin(), basis_.end(), c) != basis_.end()) continue;
      std::size_t row = kNone;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!wanted[basis_[r]] && sgn(at(r, c)) != 0) {
          row = r;
          break;
        }
      }
      if (row == kNone) return false;
      pivot(row, c);
      ++pivots_;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(at(r, rhs_)) < 0) return false;
    }
    return true;
  }

  SeparabilityResult solve() {
    const std::size_t stall_limit = kStallFactor * rows_;
    std::size_t stall = 0;
    bool least_index = false;
    while (true) {
      const auto entering = least_index ? entering_least_index() : entering_dantzig();
      if (entering == kNone) break;
      const auto leaving = ratio_test(entering);
      if (leaving == kNone) throw std::logic_error("phase I objective unbounded; tableau is corrupt");
      const bool degenerate = sgn(at(leaving, rhs_)) == 0;
      pivot(leaving, entering);
      ++pivots_;
      stall = degenerate ? stall + 1 : 0;
      if (stall >= stall_limit) least_index = true;
    }
    SeparabilityResult result = sgn(at(obj_, rhs_)) == 0 ? SeparabilityResult(hull_witness())
                                                                     : SeparabilityResult(separator());
    result.pivots = pivots_;
    return result;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kStallFactor = 8;

  BigInt& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  std::size_t entering_least_index() {
    for (std::size_t j = 0; j < npoints_; ++j) {
      if (sgn(at(obj_, j)) < 0) return j;
    }
    return kNone;
  }

  std::size_t entering_dantzig() {
    std::size_t best = kNone;
    for (std::size_t j = 0; j < npoints_; ++j) {
      const auto& c = at(obj_, j);
      if (sgn(c) < 0 && (best == kNone || c < at(obj_, best))) best = j;
    }
    return best;
  }

  // Minimum rhs/col over positive column entries; ties to the least basic index.
  std::size_t ratio_test(std::size_t col) {
    std::size_t best = kNone;
    BigInt lhs;
    BigInt rhs;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = at(r, col);
      if (sgn(a) <= 0) continue;
      if (best == kNone) {
        best = r;
        continue;
      }
      // rhs_r / a  vs  rhs_best / a_best, denominators positive
      mpz_mul(lhs.get_mpz_t(), at(r, rhs_).get_mpz_t(), at(best, col).get_mpz_t());
      mpz_mul(rhs.get_mpz_t(), at(best, rhs_).get_mpz_t(), a.get_mpz_t());
      const int c = cmp(lhs, rhs);
      if (c < 0 || (c == 0 && basis_[r] < basis_[best])) best = r;
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t s) {
    const BigInt p = at(r, s);
    BigInt f;
    BigInt tmp;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      f = at(i, s);
      const bool f_zero = sgn(f) == 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        mpz_ptr cell = at(i, j).get_mpz_t();
        mpz_srcptr pivot_row = at(r, j).get_mpz_t();
        if (f_zero || mpz_sgn(pivot_row) == 0) {
          if (mpz_sgn(cell) == 0) continue;
          mpz_mul(tmp.get_mpz_t(), cell, p.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), cell, p.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), pivot_row);
        }
        mpz_divexact(cell, tmp.get_mpz_t(), det_.get_mpz_t());
      }
    }
    det_ = p;
    basis_[r] = s;
    if (sgn(det_) < 0) {
      for (auto& cell : cells_) mpz_neg(cell.get_mpz_t(), cell.get_mpz_t());
      mpz_neg(det_.get_mpz_t(), det_.get_mpz_t());
    }
  }

  HullWitness hull_witness() {
    HullWitness w;
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t var = basis_[r];
      if (var >= npoints_ || sgn(at(r, rhs_)) == 0) continue;
      Rational coef(2 * at(r, rhs_), det_);
      coef.canonicalize();
      const auto& [pt, positive] = points_[var];
      (positive ? w.positive : w.negative).emplace(*pt, std::move(coef));
    }
    return w;
  }

  // Duals pi_k = 1 - d_k, with d_k the reduced cost of artificial k; the
  // certificate is z = -pi, scaled by det to integers.
  Separator separator() {
    std::vector<BigInt> z(width_ + 1);
    BigInt g = 0;
    for (std::size_t k = 0; k <= width_; ++k) {
      z[k] = at(obj_, npoints_ + k) - det_;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
    }
    if (g == 0) throw std::logic_error("phase I duals vanished on an infeasible system");
    Separator s;
    s.normal.reserve(width_);
    for (std::size_t k = 0; k < width_; ++k) s.normal.emplace_back(z[k] / g);
    s.offset = Rational(z[width_] / g);
    return s;
  }

  std::size_t width_;
  std::size_t npoints_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t rhs_;
  std::size_t obj_;
  std::vector<BigInt> cells_;
  std::vector<std::size_t> basis_;
  BigInt det_ = 1;
  std::size_t pivots_ = 0;
  std::vector<std::pair<const BitVec*, bool>> points_;
};

// The same Phase I in double precision with a perturbed right-hand side,
// used only to guess an optimal basis for the exact tableau.
std::optional<std::vector<std::size_t>> guess_basis(const Dichotomy& d) {
  const std::size_t n = d.width();
  const std::size_t npoints = d.size();
  const std::size_t rows = n + 2;
  const std::size_t cols = npoints + rows + 1;
  const std::size_t rhs = cols - 1;
  const std::size_t obj = rows;
  constexpr double kTol = 1e-9;
  std::vector<double> t((rows + 1) * cols, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * cols + c]; };

  std::size_t i = 0;
  auto add_column = [&](const BitVec& x, double s) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x.bit(k)) at(k, i) = s;
    }
    at(n, i) = -s;
    at(n + 1, i) = 1.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < rows; ++k) sum += at(k, i);
    at(obj, i) = -sum;
    ++i;
  };
  for (const auto& x : d.positives()) add_column(x, 1.0);
  for (const auto& x : d.negatives()) add_column(x, -1.0);
  std::vector<std::size_t> basis(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    at(k, npoints + k) = 1.0;
    basis[k] = npoints + k;
    at(k, rhs) = (k == n + 1 ? 1.0 : 0.0) + 1e-7 * static_cast<double>(k + 1) / static_cast<double>(rows);
    at(obj, rhs) -= at(k, rhs);
  }

  const std::size_t max_iterations = 50 * (rows + cols);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    std::size_t s = npoints;
    for (std::size_t j = 0; j < npoints; ++j) {
      if (at(obj, j) < -kTol && (s == npoints || at(obj, j) < at(obj, s))) s = j;
    }
    if (s == npoints) return basis;
    std::size_t r = rows;
    double best = 0.0;
    for (std::size_t k = 0; k < rows; ++k) {
      if (at(k, s) <= kTol) continue;
      const double ratio = at(k, rhs) / at(k, s);
      if (r == rows || ratio < best) {
        r = k;
        best = ratio;
      }
    }
    if (r == rows) return std::nullopt;
    const double p = at(r, s);
    for (std::size_t c = 0; c < cols; ++c) at(r, c) /= p;
    for (std::size_t k = 0; k <= rows; ++k) {
      if (k == r) continue;
      const double f = at(k, s);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) at(k, c) -= f * at(r, c);
    }
    basis[r] = s;
  }
  return std::nullopt;
}

Rational dot(const std::vector<Rational>& normal, const BitVec& x) {
  Rational sum = 0;
  for (std::size_t j = 0; j < x.width(); ++j) {
    if (x.bit(j)) sum += normal[j];
  }
  return sum;
}

bool side_sums_to_one(const std::map<BitVec, Rational>& side, const std::vector<BitVec>& allowed, std::size_t width,
                      std::vector<Rational>& point) {
  Rational total = 0;
  point.assign(width, Rational(0));
  for (const auto& [x, coef] : side) {
    if (x.width() != width || sgn(coef) < 0) return false;
    if (!std::binary_search(allowed.begin(), allowed.end(), x)) return false;
    total += coef;
    for (std::size_t j = 0; j < width; ++j) {
      if (x.bit(j)) point[j] += coef;
    }
  }
  return total == 1;
}

void check_oracle_guard(std::size_t width, std::size_t points) {
  if (width > 5) throw GuardError("oracle_separable supports width <= 5, got " + std::to_string(width));
  if (points > 32) throw GuardError("oracle_separable supports at most 32 points, got " + std::to_string(points));
}

// Calls visit(y) for every y in [-bound, bound]^len; stops early when visit returns true.
template <typename Visit>
bool for_each_box_vector(std::size_t len, int bound, Visit&& visit) {
  std::vector<int> y(len, -bound);
  while (true) {
    if (visit(y)) return true;
    std::size_t k = 0;
    while (k < len && y[k] == bound) y[k++] = -bound;
    if (k == len) return false;
    ++y[k];
  }
}

// Points in +-1 coordinates.
std::vector<std::vector<int>> signed_points(std::span<const BitVec> points) {
  std::vector<std::vector<int>> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::vector<int> v(p.width());
    for (std::size_t j = 0; j < p.width(); ++j) v[j] = p.bit(j) ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

int affine_value(const std::vector<int>& y, const std::vector<int>& x) {
  int v = -y.back();
  for (std::size_t j = 0; j < x.size(); ++j) v += y[j] * x[j];
  return v;
}

}  // namespace

std::vector<Rational> common_point(const HullWitness& witness, std::size_t width) {
  std::vector<Rational> point(width, Rational(0));
  for (const auto& [x, coef] : witness.positive) {
    for (std::size_t j = 0; j < width; ++j) {
      if (x.bit(j)) point[j] += coef;
    }
  }
  return point;
}

SeparabilityResult decide_separable(const Dichotomy& d, const SolveOptions& options) {
  const std::size_t n = d.width();
  if (d.positives().empty() || d.negatives().empty()) {
    Separator s{std::vector<Rational>(n, Rational(0)), Rational(0)};
    if (!d.positives().empty()) s.offset = -1;
    if (!d.negatives().empty()) s.offset = 1;
    return SeparabilityResult(std::move(s));
  }
  if (options.warm_start) {
    if (const auto basis = guess_basis(d)) {
      FarkasTableau warm(d);
      if (warm.crash(*basis)) {
        auto result = warm.solve();
        result.warm_started = true;
        return result;
      }
    }
  }
  return FarkasTableau(d).solve();
}

bool verify_separator(const Dichotomy& d, const Separator& s) {
  if (s.normal.size() != d.width()) return false;
  for (const auto& x : d.positives()) {
    if (dot(s.normal, x) <= s.offset) return false;
  }
  for (const auto& x : d.negatives()) {
    if (dot(s.normal, x) >= s.offset) return false;
  }
  return true;
}

bool verify_hull_witness(const Dichotomy& d, const HullWitness& w) {
  std::vector<Rational> plus_point;
  std::vector<Rational> minus_point;
  return side_sums_to_one(w.positive, d.positives(), d.width(), plus_point) &&
         side_sums_to_one(w.negative, d.negatives(), d.width(), minus_point) && plus_point == minus_point;
}

Separability oracle_separable(const Dichotomy& d, int bound) {
  check_oracle_guard(d.width(), d.size());
  const auto pos = signed_points(d.positives());
  const auto neg = signed_points(d.negatives());
  const bool found = for_each_box_vector(d.width() + 1, bound, [&](const std::vector<int>& y) {
    for (const auto& x : pos) {
      if (affine_value(y, x) <= 0) return false;
    }
    for (const auto& x : neg) {
      if (affine_value(y, x) >= 0) return false;
    }
    return true;
  });
  return found ? Separability::kSeparable : Separability::kInseparable;
}

std::vector<std::uint64_t> oracle_separable_labelings(std::span<const BitVec> points, int bound) {
  if (points.empty()) return {0};
  const std::size_t n = points.front().width();
  check_oracle_guard(n, points.size());
  const auto pts = signed_points(points);
  std::vector<std::uint64_t> masks;
  for_each_box_vector(n + 1, bound, [&](const std::vector<int>& y) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int v = affine_value(y, pts[i]);
      if (v == 0) return false;
      if (v > 0) mask |= std::uint64_t{1} << i;
    }
    masks.push_back(mask);
    return false;
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

}  // namespace mpsep
