#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

// Growth sequence inner = Z_0 c Z_1 c ... c Z_n = outer of a standard
// filling; consecutive states differ by one cell.
struct TableauPath {
  std::vector<Partition> states;

  long length() const { return static_cast<long>(states.size()) - 1; }
  // time at which the cell was inserted, in 1..n
  long insertion_time(Cell c) const;
};

// Exact uniform sample over growth paths: from state nu each addable cell c
// is chosen with probability proportional to the number of completions
// count(outer / (nu + c)). Deterministic for a fixed seed.
TableauPath sample_tableau(const SkewShape& s, std::uint64_t seed);

struct LatticeWalkResult {
  std::vector<std::vector<long>> path;  // coordinate vectors, length n+1
  bool success = false;                 // stayed weakly decreasing and hit outer
};

// n-step walk from inner, stepping row i with probability
// (outer_i - inner_i)/n; success marks paths that stay inside the partition
// cone (equivalently, growth paths of the skew shape).
LatticeWalkResult lattice_walk(const SkewShape& s, std::uint64_t seed);

// closed form for the success probability:
// count(s) * prod_i ((outer_i - inner_i)/n)^(outer_i - inner_i)
Rat walk_success_exact(const SkewShape& s);

struct WalkSuccessEstimate {
  double estimate_approx = 0.0;
  long hits = 0;
  long trials = 0;
  double hoeffding_halfwidth_approx = 0.0;  // 99% band
  double lemma_floor_approx = 0.0;  // sqrt(2*pi) e^{-d(d-2)} n^{-(d^2-1)/2}, report only
};

// Monte Carlo estimate of the success probability, one stream per trial.
// Requires outer_i > inner_i for every row i <= rows().
WalkSuccessEstimate estimate_walk_success(const SkewShape& s, long trials, std::uint64_t seed);

struct McPairEstimate {
  double estimate_approx = 0.0;
  long hits = 0;
  long trials = 0;
  double hoeffding_halfwidth_approx = 0.0;  // 99% band
};

// fraction of sampled fillings that reach x before y
McPairEstimate mc_prob_before(const SkewShape& s, Cell x, Cell y, long trials, std::uint64_t seed);

// y_i = (gamma_i - (1-p) mu_i - p lambda_i)/sqrt(n), kept exact as
// numerator/sqrt(n); comparisons square both sides.
struct YVector {
  std::vector<Rat> numerators;
  long n = 0;  // the normalizer under the square root

  Rat sum_of_squares() const {
    Rat s(0);
    for (const Rat& c : numerators) s += c * c;
    return s / n;
  }
};

struct TripletClassification {
  bool pair_admissible = false;  // lambda_i - mu_i >= eps |lambda| for all i
  bool separated = false;        // both gaps >= eps^3 |lambda| / 2
  bool progressive = false;      // ||gamma - (1-p)mu - p lambda||_inf <= n^{3/4}
  bool admissible = false;       // all three
  Rat p;                         // (|gamma| - |mu|) / n
  YVector y;
  std::array<Rat, 3> solid_ratios;  // f/(F Phi) for gamma/mu, lambda/gamma, lambda/mu
};

// Exact evaluation of the admissibility predicates and solid ratios for
// mu c gamma c lambda with ambient row count d.
TripletClassification classify_triplet(const Partition& lambda, const Partition& gamma,
                                       const Partition& mu, int d, const Rat& eps);

// the three ratios f/(F Phi); the minimal solid constant of the triplet is
// max{r1, r2, 1/r3}
std::array<Rat, 3> solidity_ratios(const Partition& lambda, const Partition& gamma,
                                   const Partition& mu, int d);

}  // namespace syt
