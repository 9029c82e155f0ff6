#include "syt/schur.hpp"

#include <algorithm>
#include <functional>

namespace syt {

EvaluationPoint::EvaluationPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  // zero coordinates arise from shifted parts of padded rows and are fine;
  // negatives would break the monomial positivity the bounds rely on
  for (const Rat& c : coords_)
    if (c < 0) fail(errc::out_of_range, "evaluation point must be nonnegative");
  std::sort(coords_.begin(), coords_.end(), std::greater<>());
}

bool EvaluationPoint::distinct() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] == coords_[i - 1]) return false;
  return true;
}

namespace {

Rat det_gauss(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat factor = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

std::vector<long> shifted_mu(const Partition& mu, int d) {
  return shifted_parts(mu, d);
}

Rat schur_bialternant(const Partition& mu, const EvaluationPoint& x) {
  const int d = x.dims();
  const auto m = shifted_mu(mu, d);
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          pow_rat(x.x(j), static_cast<unsigned long>(m[static_cast<std::size_t>(i - 1)]));
  Rat det = det_gauss(std::move(a));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) det /= x.x(i) - x.x(j);
  return det;
}

}  // namespace

Rat schur_eval_via_ssyt(const Partition& mu, const EvaluationPoint& x) {
  const int d = x.dims();
  if (mu.length() > d) fail(errc::mu_too_long, "schur: partition has more rows than variables");
  Rat total(0);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(mu.length()));
  for (int i = 1; i <= mu.length(); ++i)
    t[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(mu.part(i)));

  std::function<void(int, int, Rat)> fill = [&](int i, int j, Rat monomial) {
    if (i > mu.length()) {
      total += monomial;
      return;
    }
    int ni = i, nj = j + 1;
    if (nj > mu.part(i)) {
      ni = i + 1;
      nj = 1;
    }
    int lo = 1;
    if (j > 1) lo = std::max(lo, t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]);
    if (i > 1 && mu.part(i - 1) >= j)
      lo = std::max(lo, t[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1);
    for (int v = lo; v <= d; ++v) {
      t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      fill(ni, nj, monomial * x.x(v));
    }
  };
  fill(1, 1, Rat(1));
  return total;
}

Rat schur_eval_divided(const Partition& mu, const EvaluationPoint& x) {
  const int d = x.dims();
  if (mu.length() > d) fail(errc::mu_too_long, "schur: partition has more rows than variables");
  const auto m = shifted_mu(mu, d);
  const long kmax = m.empty() ? 0 : m[0];

  // h[i][k] = complete homogeneous polynomial of degree k in x_1..x_i
  std::vector<std::vector<Rat>> h(static_cast<std::size_t>(d + 1),
                                  std::vector<Rat>(static_cast<std::size_t>(kmax + 1), Rat(0)));
  for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)][0] = Rat(1);
  for (int i = 1; i <= d; ++i)
    for (long k = 1; k <= kmax; ++k)
      h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] +
          x.x(i) * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];

  // row-reduced bialternant: entry (i,j) is the (i-1)-st divided difference
  // of t^{m_j} over x_1..x_i, which is h_{m_j-i+1}(x_1..x_i)
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      long k = m[static_cast<std::size_t>(j - 1)] - i + 1;
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          (k < 0) ? Rat(0) : h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
  Rat det = det_gauss(std::move(a));
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) det = -det;
  return det;
}

Rat schur_eval(const Partition& mu, const EvaluationPoint& x) {
  if (mu.length() > x.dims()) fail(errc::mu_too_long, "schur: partition has more rows than variables");
  if (x.distinct()) return schur_bialternant(mu, x);
  if (mu.size() <= 12) return schur_eval_via_ssyt(mu, x);
  return schur_eval_divided(mu, x);
}

Int schur_at_ones(const Partition& mu, int d) {
  if (mu.length() > d) fail(errc::mu_too_long, "schur_at_ones: partition has more rows than variables");
  const auto m = shifted_parts(mu, d);
  Rat r(1);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      r *= make_rat(m[static_cast<std::size_t>(i - 1)] - m[static_cast<std::size_t>(j - 1)], j - i);
  return rat_to_int(r, "schur_at_ones");
}

Rat schur_ratio_bound(const SkewShape& s) {
  const int d = s.rows();
  const auto l = shifted_parts(s.outer(), d);
  std::vector<Rat> coords;
  coords.reserve(l.size());
  for (long v : l) coords.emplace_back(v);
  Rat value = schur_eval(s.inner(), EvaluationPoint(std::move(coords)));
  for (int i = 1; i <= d; ++i)
    value /= pow_rat(Rat(l[static_cast<std::size_t>(i - 1)]),
                     static_cast<unsigned long>(s.inner().part(i)));
  return value;
}

IntervalDecomposition::IntervalDecomposition(std::vector<int> block_ends, int d)
    : ends_(std::move(block_ends)), d_(d) {
  if (ends_.empty() || ends_.back() != d) fail(errc::bad_params, "interval decomposition must end at d");
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (ends_[i] < 1 || (i > 0 && ends_[i] <= ends_[i - 1]))
      fail(errc::bad_params, "interval decomposition ends must increase");
  }
}

IntervalDecomposition IntervalDecomposition::singletons(int d) {
  std::vector<int> ends(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) ends[static_cast<std::size_t>(i - 1)] = i;
  return IntervalDecomposition(std::move(ends), d);
}

IntervalDecomposition IntervalDecomposition::single_block(int d) {
  return IntervalDecomposition({d}, d);
}

int IntervalDecomposition::block_of(int i) const {
  for (std::size_t k = 0; k < ends_.size(); ++k)
    if (i <= ends_[k]) return static_cast<int>(k);
  fail(errc::out_of_range, "block_of: index outside [d]");
}

Rat cross_block_max(const std::vector<long>& shifted, const IntervalDecomposition& b) {
  const int d = static_cast<int>(shifted.size());
  Rat best(0);
  bool seen = false;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (b.same_block(i, j)) continue;
      Rat v = make_rat(shifted[static_cast<std::size_t>(i - 1)],
                       shifted[static_cast<std::size_t>(i - 1)] - shifted[static_cast<std::size_t>(j - 1)]);
      if (!seen || v > best) best = v;
      seen = true;
    }
  return best;  // zero when no cross-block pair exists
}

IntervalBound interval_upper_bound(const SkewShape& s, const IntervalDecomposition& b) {
  const int d = s.rows();
  const auto l = shifted_parts(s.outer(), d);
  const Rat big_n = cross_block_max(l, b);

  IntervalBound out;
  out.constant = Rat(factorial(static_cast<unsigned long>(d))) *
                 std::max(Rat(1), Rat(Rat(d) * (d - 1) * (d - 1) / e_lower_bound()));
  out.same_block_factor = Rat(1);
  out.cross_block_factor = Rat(1);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (b.same_block(i, j))
        out.same_block_factor *= Rat(s.inner().part(i) - s.inner().part(j) + j - i) + big_n;
      else
        out.cross_block_factor *= make_rat(l[static_cast<std::size_t>(i - 1)],
                                           l[static_cast<std::size_t>(i - 1)] -
                                               l[static_cast<std::size_t>(j - 1)]);
    }
  out.bound = out.constant * out.same_block_factor * out.cross_block_factor;
  return out;
}

Rat block_balance(const SkewShape& s, const IntervalDecomposition& b) {
  const int d = s.rows();
  Rat v(1);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (b.same_block(i, j))
        v *= s.inner().part(i) - s.inner().part(j) + j - i;
      else
        v *= make_rat(s.outer().part(i) + d - i, s.outer().part(i) - s.outer().part(j) + j - i);
    }
  return v;
}

}  // namespace syt
