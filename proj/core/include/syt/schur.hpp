#pragma once

#include <vector>

#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

// Evaluation point x_1 >= ... >= x_d > 0. Construction sorts the coordinates
// descending, so two permutations of the same multiset evaluate identically.
class EvaluationPoint {
 public:
  explicit EvaluationPoint(std::vector<Rat> coords);

  int dims() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& x(int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  bool distinct() const;

 private:
  std::vector<Rat> coords_;
};

// Exact Schur polynomial value. Distinct coordinates evaluate through the
// bialternant determinant; repeated coordinates are auto-routed to the
// semistandard-sum expansion for small shapes and to a confluent
// divided-difference determinant otherwise.
Rat schur_eval(const Partition& mu, const EvaluationPoint& x);

// alternate exact routes, used to cross-check the auto-routed evaluator
Rat schur_eval_via_ssyt(const Partition& mu, const EvaluationPoint& x);
Rat schur_eval_divided(const Partition& mu, const EvaluationPoint& x);

// |SSYT(mu, d)| by the classical product formula over shifted parts
Int schur_at_ones(const Partition& mu, int d);

// s_mu(l_1,...,l_d) / (l_1^{mu_1} ... l_d^{mu_d}) at the shifted outer parts;
// an upper bound for count/hook_bound
Rat schur_ratio_bound(const SkewShape& s);

// Consecutive blocks B_1..B_r covering [d], given by their right endpoints.
class IntervalDecomposition {
 public:
  IntervalDecomposition(std::vector<int> block_ends, int d);

  static IntervalDecomposition singletons(int d);
  static IntervalDecomposition single_block(int d);

  int dims() const { return d_; }
  int block_count() const { return static_cast<int>(ends_.size()); }
  int block_of(int i) const;
  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
  const std::vector<int>& ends() const { return ends_; }

 private:
  std::vector<int> ends_;
  int d_;
};

// max over cross-block i<j of l_i/(l_i - l_j); zero when every pair of
// indices shares a block. The parts must be strictly decreasing.
Rat cross_block_max(const std::vector<long>& shifted, const IntervalDecomposition& b);

struct IntervalBound {
  Rat bound;
  Rat constant;           // d! * max{1, d(d-1)^2/e}, with e undervalued rationally
  Rat same_block_factor;  // prod over same-block pairs of (m_i - m_j + N)
  Rat cross_block_factor; // prod over cross-block pairs of l_i/(l_i - l_j)
};

// Upper bound for count/hook_bound along an interval decomposition.
IntervalBound interval_upper_bound(const SkewShape& s, const IntervalDecomposition& b);

// prod over same-block pairs of (inner_i - inner_j + j - i) times
// prod over cross-block pairs of (outer_i + d - i)/(outer_i - outer_j + j - i);
// the block-wise approximation of the balance function
Rat block_balance(const SkewShape& s, const IntervalDecomposition& b);

// rational undervalue of e, keeping derived upper-bound constants valid
inline Rat e_lower_bound() { return make_rat(2718281L, 1000000L); }

}  // namespace syt
