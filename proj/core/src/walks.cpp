#include "syt/walks.hpp"

#include <cmath>

#include "syt/counting.hpp"
#include "syt/ideals.hpp"
#include "syt/rng.hpp"

namespace syt {

long TableauPath::insertion_time(Cell c) const {
  for (std::size_t t = 1; t < states.size(); ++t)
    if (states[t].part(c.row) == c.col && states[t - 1].part(c.row) == c.col - 1)
      return static_cast<long>(t);
  fail(errc::cell_outside_shape, "insertion_time: cell never inserted");
}

namespace {

TableauPath sample_tableau_with(const SkewShape& s, Rng& rng) {
  TableauPath path;
  Partition nu = s.inner();
  path.states.push_back(nu);
  const long n = s.size();
  for (long t = 0; t < n; ++t) {
    const auto cells = addable_cells(nu, s.outer());
    std::vector<Int> weight;
    Int total = 0;
    weight.reserve(cells.size());
    for (const Cell& c : cells) {
      weight.push_back(count_paths(SkewShape(s.outer(), nu.grown(c.row))));
      total += weight.back();
    }
    Int pick = rng.below_big(total);
    std::size_t chosen = 0;
    while (pick >= weight[chosen]) {
      pick -= weight[chosen];
      ++chosen;
    }
    nu = nu.grown(cells[chosen].row);
    path.states.push_back(nu);
  }
  return path;
}

// one biased lattice walk; fills path only when asked to keep it
bool walk_once(const SkewShape& s, Rng& rng, std::vector<std::vector<long>>* path) {
  const int d = s.rows();
  const long n = s.size();
  std::vector<long> x(static_cast<std::size_t>(d)), target(static_cast<std::size_t>(d)),
      cumulative(static_cast<std::size_t>(d));
  long acc = 0;
  for (int i = 1; i <= d; ++i) {
    x[static_cast<std::size_t>(i - 1)] = s.inner().part(i);
    target[static_cast<std::size_t>(i - 1)] = s.outer().part(i);
    acc += s.outer().part(i) - s.inner().part(i);
    cumulative[static_cast<std::size_t>(i - 1)] = acc;
  }
  if (path) path->push_back(x);
  bool ordered = true;
  for (long t = 0; t < n; ++t) {
    long u = static_cast<long>(rng.below(static_cast<std::uint64_t>(n)));
    int row = 0;
    while (cumulative[static_cast<std::size_t>(row)] <= u) ++row;
    x[static_cast<std::size_t>(row)]++;
    if (row > 0 && x[static_cast<std::size_t>(row - 1)] < x[static_cast<std::size_t>(row)])
      ordered = false;
    if (path) path->push_back(x);
  }
  return ordered && x == target;
}

double hoeffding_halfwidth_99(long trials) {
  // solves 2 exp(-2 w^2 t) = 0.01 for the halfwidth w of the mean
  return std::sqrt(std::log(200.0) / (2.0 * static_cast<double>(trials)));
}

}  // namespace

TableauPath sample_tableau(const SkewShape& s, std::uint64_t seed) {
  Rng rng(seed);
  return sample_tableau_with(s, rng);
}

LatticeWalkResult lattice_walk(const SkewShape& s, std::uint64_t seed) {
  Rng rng(seed);
  LatticeWalkResult out;
  out.success = s.size() == 0 ? true : walk_once(s, rng, &out.path);
  return out;
}

Rat walk_success_exact(const SkewShape& s) {
  const long n = s.size();
  if (n == 0) return Rat(1);
  Rat p(count_paths(s));
  for (int i = 1; i <= s.rows(); ++i) {
    long gap = s.outer().part(i) - s.inner().part(i);
    if (gap > 0) p *= pow_rat(make_rat(gap, n), static_cast<unsigned long>(gap));
  }
  return p;
}

WalkSuccessEstimate estimate_walk_success(const SkewShape& s, long trials, std::uint64_t seed) {
  if (trials < 1) fail(errc::bad_params, "estimate_walk_success: trials must be positive");
  const int d = s.rows();
  for (int i = 1; i <= d; ++i)
    if (s.outer().part(i) == s.inner().part(i))
      fail(errc::zero_row_difference,
           "estimate_walk_success: every row must grow (outer_i > inner_i)");
  WalkSuccessEstimate out;
  out.trials = trials;
  for (long t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    if (walk_once(s, rng, nullptr)) out.hits++;
  }
  out.estimate_approx = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.hoeffding_halfwidth_approx = hoeffding_halfwidth_99(trials);
  const double n = static_cast<double>(s.size());
  out.lemma_floor_approx = std::sqrt(2.0 * M_PI) * std::exp(-static_cast<double>(d) * (d - 2)) *
                           std::pow(n, -(static_cast<double>(d) * d - 1.0) / 2.0);
  return out;
}

McPairEstimate mc_prob_before(const SkewShape& s, Cell x, Cell y, long trials,
                              std::uint64_t seed) {
  if (trials < 1) fail(errc::bad_params, "mc_prob_before: trials must be positive");
  if (!s.contains_cell(x) || !s.contains_cell(y))
    fail(errc::cell_outside_shape, "mc_prob_before: cell outside shape");
  if (x == y) fail(errc::equal_cells, "mc_prob_before: cells must differ");
  McPairEstimate out;
  out.trials = trials;
  for (long t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    TableauPath p = sample_tableau_with(s, rng);
    if (p.insertion_time(x) < p.insertion_time(y)) out.hits++;
  }
  out.estimate_approx = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.hoeffding_halfwidth_approx = hoeffding_halfwidth_99(trials);
  return out;
}

namespace {

Rat solid_ratio(const Partition& outer, const Partition& inner, int d) {
  SkewShape shape(outer, inner, d);
  Rat f(count_paths(shape));
  return f / (hook_bound(shape) * balance_phi(shape));
}

}  // namespace

std::array<Rat, 3> solidity_ratios(const Partition& lambda, const Partition& gamma,
                                   const Partition& mu, int d) {
  if (!gamma.contains(mu) || !lambda.contains(gamma))
    fail(errc::containment_violated, "solidity_ratios: need mu <= gamma <= lambda");
  return {solid_ratio(gamma, mu, d), solid_ratio(lambda, gamma, d), solid_ratio(lambda, mu, d)};
}

TripletClassification classify_triplet(const Partition& lambda, const Partition& gamma,
                                       const Partition& mu, int d, const Rat& eps) {
  if (!gamma.contains(mu) || !lambda.contains(gamma))
    fail(errc::containment_violated, "classify_triplet: need mu <= gamma <= lambda");
  if (lambda.length() > d) fail(errc::d_too_small, "classify_triplet: d < rows of lambda");
  const long n = lambda.size() - mu.size();
  if (n == 0) fail(errc::too_small, "classify_triplet: empty skew shape");

  TripletClassification out;
  const Rat eps_weight = eps * lambda.size();
  const Rat sep_weight = pow_rat(eps, 3) * lambda.size() / 2;

  out.pair_admissible = true;
  out.separated = true;
  for (int i = 1; i <= d; ++i) {
    if (Rat(lambda.part(i) - mu.part(i)) < eps_weight) out.pair_admissible = false;
    if (Rat(gamma.part(i) - mu.part(i)) < sep_weight) out.separated = false;
    if (Rat(lambda.part(i) - gamma.part(i)) < sep_weight) out.separated = false;
  }

  out.p = make_rat(gamma.size() - mu.size(), n);
  out.y.n = n;
  out.progressive = true;
  for (int i = 1; i <= d; ++i) {
    Rat dev = Rat(gamma.part(i)) - (1 - out.p) * mu.part(i) - out.p * lambda.part(i);
    out.y.numerators.push_back(dev);
    // |dev| <= n^{3/4}  <=>  dev^4 <= n^3, in integer arithmetic
    Rat dev4 = pow_rat(dev, 4);
    if (dev4.get_num() > pow_int(Int(n), 3) * dev4.get_den()) out.progressive = false;
  }
  out.admissible = out.pair_admissible && out.separated && out.progressive;
  out.solid_ratios = solidity_ratios(lambda, gamma, mu, d);
  return out;
}

}  // namespace syt
