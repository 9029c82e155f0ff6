#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "syt/counting.hpp"
#include "syt/rng.hpp"
#include "syt/sorting.hpp"
#include "syt/walks.hpp"

using namespace syt;

namespace {

SkewShape straight(const Partition& p) { return SkewShape(p, Partition{}); }

std::string path_key(const TableauPath& p) {
  std::string key;
  for (std::size_t t = 1; t < p.states.size(); ++t)
    for (int i = 1; i <= p.states[t].length(); ++i)
      if (p.states[t].part(i) != p.states[t - 1].part(i)) key += static_cast<char>('0' + i);
  return key;
}

}  // namespace

TEST_SUITE_BEGIN("walks");

TEST_CASE("sampling is deterministic and hits every outcome uniformly") {
  SkewShape s = straight(Partition({2, 2}));
  CHECK(path_key(sample_tableau(s, 7)) == path_key(sample_tableau(s, 7)));

  std::map<std::string, long> freq;
  const long trials = 10000;
  for (long t = 0; t < trials; ++t) freq[path_key(sample_tableau(s, 1000 + t))]++;
  REQUIRE(freq.size() == 2);
  std::vector<long> observed;
  for (auto& [k, v] : freq) observed.push_back(v);
  CHECK(oracle::chi_square(observed, {0.5, 0.5}, trials) < oracle::chi2_crit_999(1));
}

TEST_CASE("empty shape samples the empty path") {
  TableauPath p = sample_tableau(SkewShape(Partition({3, 1}), Partition({3, 1})), 5);
  CHECK(p.length() == 0);
}

TEST_CASE("sampled pair frequencies approach the exact sorting probability") {
  SkewShape s = straight(Partition({3, 3}));
  McPairEstimate e = mc_prob_before(s, Cell{1, 2}, Cell{2, 1}, 20000, 11);
  CHECK(std::abs(e.estimate_approx - 0.6) <= e.hoeffding_halfwidth_approx);

  e = mc_prob_before(straight(Partition({2, 2})), Cell{1, 2}, Cell{2, 1}, 20000, 13);
  CHECK(std::abs(e.estimate_approx - 0.5) <= e.hoeffding_halfwidth_approx);
}

TEST_CASE("hoeffding band covers the truth across repeated runs") {
  SkewShape s = straight(Partition({3, 3}));
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    McPairEstimate e = mc_prob_before(s, Cell{1, 2}, Cell{2, 1}, 2000, seed);
    if (std::abs(e.estimate_approx - 0.6) <= e.hoeffding_halfwidth_approx) covered++;
  }
  CHECK(covered >= 198);  // at least the nominal 99%
}

TEST_CASE("lattice walk success probability") {
  CHECK(walk_success_exact(straight(Partition({1, 1}))) == make_rat(1L, 4L));
  CHECK(walk_success_exact(straight(Partition({6}))) == 1);
  CHECK(walk_success_exact(straight(Partition({3, 3}))) == make_rat(5L, 64L));

  WalkSuccessEstimate e = estimate_walk_success(straight(Partition({1, 1})), 40000, 3);
  CHECK(std::abs(e.estimate_approx - 0.25) <= e.hoeffding_halfwidth_approx);

  // d = 1 walks always succeed
  e = estimate_walk_success(straight(Partition({5})), 100, 3);
  CHECK(e.hits == 100);

  CHECK_THROWS_AS(estimate_walk_success(SkewShape(Partition({2}), Partition{}, 2), 10, 1), error);
}

TEST_CASE("exact success probability matches the estimate on small shapes") {
  const std::vector<SkewShape> shapes = {
      straight(Partition({2, 1})), straight(Partition({3, 2})),
      SkewShape(Partition({3, 2}), Partition({1})), straight(Partition({2, 2, 1})),
      SkewShape(Partition({4, 2}), Partition({1, 1}))};
  for (const SkewShape& s : shapes) {
    WalkSuccessEstimate e = estimate_walk_success(s, 60000, 17);
    double exact = mpq_get_d(walk_success_exact(s).get_mpq_t());
    CHECK(std::abs(e.estimate_approx - exact) <= e.hoeffding_halfwidth_approx);
  }
}

TEST_CASE("conditioned lattice walks are uniform growth paths") {
  auto conditioned_frequencies = [](const SkewShape& s, long want) {
    std::map<std::string, long> freq;
    long accepted = 0;
    for (std::uint64_t seed = 0; accepted < want && seed < 500000; ++seed) {
      LatticeWalkResult w = lattice_walk(s, seed);
      if (!w.success) continue;
      accepted++;
      std::string key;
      for (std::size_t t = 1; t < w.path.size(); ++t)
        for (std::size_t i = 0; i < w.path[t].size(); ++i)
          if (w.path[t][i] != w.path[t - 1][i]) key += static_cast<char>('1' + i);
      freq[key]++;
    }
    return std::pair(freq, accepted);
  };

  auto [freq2, acc2] = conditioned_frequencies(straight(Partition({2, 2})), 4000);
  REQUIRE(freq2.size() == 2);
  std::vector<long> observed;
  for (auto& [k, v] : freq2) observed.push_back(v);
  CHECK(oracle::chi_square(observed, {0.5, 0.5}, acc2) < oracle::chi2_crit_999(1));

  auto [freq5, acc5] = conditioned_frequencies(SkewShape(Partition({3, 2}), Partition({1})), 4000);
  REQUIRE(freq5.size() == 5);
  observed.clear();
  for (auto& [k, v] : freq5) observed.push_back(v);
  CHECK(oracle::chi_square(observed, std::vector<double>(5, 0.2), acc5) < oracle::chi2_crit_999(4));
}

TEST_CASE("triplet classification") {
  TripletClassification c =
      classify_triplet(Partition({4, 4}), Partition({2, 2}), Partition{}, 2, make_rat(1L, 4L));
  CHECK(c.pair_admissible);
  CHECK(c.p == make_rat(1L, 2L));
  CHECK(c.y.numerators == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(c.progressive);

  c = classify_triplet(Partition({4, 4}), Partition({2, 2}), Partition({1, 1}), 2, make_rat(1L, 2L));
  CHECK(!c.pair_admissible);  // row gap 3 misses eps * |lambda| = 4

  CHECK_THROWS_AS(
      classify_triplet(Partition({4, 4}), Partition({2, 2}), Partition({3, 3}), 2, make_rat(1L, 4L)),
      error);
}

TEST_CASE("admissibility forces eps at most 1/d") {
  // any eps > 1/d rejects every pair
  for (int n = 4; n <= 9; ++n)
    for (const Partition& lambda : partitions_of(n, 3)) {
      if (lambda.length() < 2) continue;
      const int d = lambda.length();
      const Rat eps = make_rat(1L, static_cast<long>(d)) + make_rat(1L, 100L);
      for (const Partition& mu : subdiagrams(lambda)) {
        if (mu.size() == lambda.size()) continue;
        TripletClassification c = classify_triplet(lambda, mu, mu, d, eps);
        CHECK(!c.pair_admissible);
      }
    }
}

TEST_CASE("solidity ratios") {
  auto r = solidity_ratios(Partition({4, 2}), Partition({2}), Partition({2}), 2);
  CHECK(r[0] == 1);  // empty inner shape

  r = solidity_ratios(Partition({4, 2}), Partition({3, 1}), Partition({2}), 2);
  for (int i = 0; i < 3; ++i) {
    // f/F >= 1 componentwise; the balance factor may push the ratio below 1
    SkewShape shapes[3] = {SkewShape(Partition({3, 1}), Partition({2}), 2),
                           SkewShape(Partition({4, 2}), Partition({3, 1}), 2),
                           SkewShape(Partition({4, 2}), Partition({2}), 2)};
    CHECK(r[static_cast<std::size_t>(i)] * balance_phi(shapes[i]) >= 1);
  }

  r = solidity_ratios(Partition({3, 2}), Partition{}, Partition{}, 2);
  CHECK(r[0] == 1);
  CHECK(r[1] == r[2]);
}

TEST_CASE("non-admissible triplets become rarer as the shape grows") {
  // fixed Thoma direction (2/3, 1/3); frequency of non-admissible snapshots
  // at half time should not increase with n
  const Rat eps = make_rat(1L, 6L);
  std::vector<double> bad_freq;
  for (long n : {9L, 18L, 36L}) {
    Partition lambda({2 * n / 3, n / 3});
    SkewShape s = straight(lambda);
    const long t = lambda.size() / 2;
    long bad = 0; const long trials = 300;
    for (long trial = 0; trial < trials; ++trial) {
      TableauPath p = sample_tableau(s, 500 + static_cast<std::uint64_t>(trial));
      const Partition& z = p.states[static_cast<std::size_t>(t)];
      TripletClassification c = classify_triplet(lambda, z, Partition{}, 2, eps);
      if (!c.admissible) bad++;
    }
    bad_freq.push_back(static_cast<double>(bad) / trials);
  }
  CHECK(bad_freq[1] <= bad_freq[0]);
  CHECK(bad_freq[2] <= bad_freq[1]);
}

TEST_SUITE_END();
