// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// everywhere a criterion states an exact bound. Returns the number of
// failing criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "syt/counting.hpp"
#include "syt/excited.hpp"
#include "syt/schur.hpp"
#include "syt/sorting.hpp"
#include "syt/verify.hpp"
#include "syt/walks.hpp"

using namespace syt;

namespace {

SkewShape straight(const Partition& p) { return SkewShape(p, Partition{}); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// 1. four-way method agreement, straight and skew, against brute force
Outcome criterion_method_agreement() {
  Outcome out;
  long straight_count = 0, skew_count = 0;
  for (int n = 0; n <= 10; ++n)
    for (const Partition& outer : partitions_of(n)) {
      const Int hlf = count_hlf(outer);
      const Int frob = count_frobenius(outer, std::max(outer.length(), 1));
      straight_count++;
      out.require(hlf == frob, "hlf vs frobenius disagree on " + outer.str());
      for (const Partition& inner : subdiagrams(outer)) {
        SkewShape s(outer, inner);
        skew_count++;
        Int expected = oracle::count_extensions(s);
        out.require(count_paths(s) == expected, "paths vs brute force on " + s.str());
        out.require(count_determinant(s) == expected, "determinant vs brute force on " + s.str());
        out.require(count_nhlf(s) == expected, "nhlf vs brute force on " + s.str());
        out.require(count_nhlf_flagged(s) == expected, "flagged nhlf vs brute force on " + s.str());
        if (inner.empty()) out.require(hlf == expected, "hlf vs brute force on " + s.str());
      }
    }
  if (out.pass)
    out.detail = std::to_string(straight_count) + " straight, " + std::to_string(skew_count) +
                 " skew shapes agree across all methods";
  return out;
}

Outcome criterion_from_suite(const char* name, int n_max) {
  Outcome out;
  SuiteParams p;
  p.n_max = n_max;
  SuiteReport r = run_suite(name, p);
  out.require(r.verdict == Verdict::pass,
              r.violations.empty() ? "suite failed"
                                   : r.violations[0].first + ": " + r.violations[0].second);
  if (out.pass)
    out.detail = std::string(name) + " over " + std::to_string(r.instances) + " instances";
  return out;
}

// 6. the (n,2)/(2) family: minimizing column near (1 - 1/sqrt(2)) n, n*delta small
Outcome criterion_n2() {
  Outcome out;
  for (long n : {100L, 200L, 400L}) {
    SkewShape s(Partition({n, 2}), Partition({2}));
    SortingReport r = delta_poset(s);
    out.require(r.delta * n <= 10, "n*delta > 10 at n=" + std::to_string(n));
    long a = -1;
    for (auto& [x, y] : r.witnesses)
      if (x.row == 1 || y.row == 1) {
        a = (x.row == 1) ? x.col : y.col;
        break;
      }
    out.require(a > 0, "no first-row witness at n=" + std::to_string(n));
    if (a > 0) {
      // |a/n - (1 - 1/sqrt(2))| <= 1/20, exactly in Q[sqrt(2)]
      Surd dev{make_rat(a, n) - 1, make_rat(1L, 2L), Int(2)};
      const Rat tol = make_rat(1L, 20L);
      out.require(surd_le_rat(dev, tol) && rat_le_surd(-tol, dev),
                  "witness column offset exceeds 0.05 at n=" + std::to_string(n));
    }
  }
  if (out.pass) out.detail = "minimizing column tracks (1-1/sqrt(2)) n at n=100,200,400";
  return out;
}

// 7. (2m, m) family: sqrt(n) delta capped and trending down. The cap holds;
// the adjacent-comparison trend does not: the exact minimum over pairs dips
// by orders of magnitude whenever some pair count lands near half of the
// total (it even reaches exactly zero on the Catalan family), so the
// sequence alternates instead of shrinking stepwise. The failure detail
// carries the descriptive statistics showing the envelope does decrease.
Outcome criterion_thick_family() {
  Outcome out;
  const Rat cap_sq = make_rat(9L, 4L);  // cap sqrt(n)*delta at 3/2, frozen
  std::vector<Rat> stat_sq;             // n * delta^2, exact
  for (long m = 2; m <= 60; ++m) {
    Rat delta = delta_poset(straight(Partition({2 * m, m}))).delta;
    Rat s2 = delta * delta * (3 * m);
    out.require(s2 <= cap_sq, "sqrt(n)*delta above the cap at m=" + std::to_string(m));
    stat_sq.push_back(s2);
  }
  int increases = 0;
  long first_up = 0;
  long kendall = 0;  // sign sum over all pairs on m >= 20
  for (long m = 20; m < 60; ++m)
    if (stat_sq[static_cast<std::size_t>(m - 1)] > stat_sq[static_cast<std::size_t>(m - 2)]) {
      if (increases == 0) first_up = m;
      increases++;
    }
  for (long a = 20; a <= 60; ++a)
    for (long b = a + 1; b <= 60; ++b) {
      int c = cmp(stat_sq[static_cast<std::size_t>(b - 2)], stat_sq[static_cast<std::size_t>(a - 2)]);
      kendall += (c > 0) - (c < 0);
    }
  out.require(increases <= 1, "sqrt(n)*delta increased " + std::to_string(increases) +
                                  " times on m >= 20 (first at m=" + std::to_string(first_up) +
                                  "); cap 3/2 held; pairwise trend sign sum " +
                                  std::to_string(kendall) + "/820 (net decreasing)");
  if (out.pass)
    out.detail = "sqrt(n)*delta capped at 3/2 with " + std::to_string(increases) +
                 " trend exceptions on 20 <= m <= 60";
  return out;
}

// 8. Catalan family: sqrt(n) delta claimed decreasing; n^{5/4} delta reported.
// Same situation as criterion 7: the exact poset minimum oscillates (it is
// 0 at m=7), so strict decrease fails; the report still shows the decay.
Outcome criterion_catalan() {
  Outcome out;
  Rat prev_sq(-1);
  long first_up = 0;
  int increases = 0;
  double last_scaled = 0, peak_tail = 0;
  for (long m = 5; m <= 50; ++m) {
    Rat delta = delta_poset(straight(Partition({m, m}))).delta;
    Rat s2 = delta * delta * (2 * m);
    if (prev_sq >= 0 && s2 > prev_sq) {
      if (increases == 0) first_up = m;
      increases++;
    }
    prev_sq = s2;
    double scaled = std::sqrt(2.0 * static_cast<double>(m)) * mpq_get_d(delta.get_mpq_t());
    if (m >= 40) peak_tail = std::max(peak_tail, scaled);
    last_scaled = std::pow(2.0 * static_cast<double>(m), 1.25) * mpq_get_d(delta.get_mpq_t());
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d adjacent increases (first at m=%ld); tail max of sqrt(n)*delta on m>=40 is "
                "%.4f; n^(5/4)*delta at m=50: %.4f (report only)",
                increases, first_up, peak_tail, last_scaled);
  out.require(increases == 0, buf);
  if (out.pass) out.detail = buf;
  return out;
}

// 9. Schur ratio and singleton interval bounds on every small skew shape
Outcome criterion_schur_bounds() {
  Outcome out;
  long checked = 0;
  for (int n = 1; n <= 9; ++n)
    for (const Partition& outer : partitions_of(n))
      for (const Partition& inner : subdiagrams(outer))
        for (int d = std::max(outer.length(), 1); d <= 4; ++d) {
          SkewShape s(outer, inner, d);
          Rat ratio = Rat(count_paths(s)) / hook_bound(s);
          checked++;
          out.require(ratio >= 1, "f/F < 1 on " + s.str());
          out.require(ratio <= schur_ratio_bound(s),
                      "Schur ratio bound fails on " + s.str() + " d=" + std::to_string(d));
          out.require(ratio <= interval_upper_bound(s, IntervalDecomposition::singletons(d)).bound,
                      "interval bound fails on " + s.str() + " d=" + std::to_string(d));
        }
  if (out.pass) out.detail = std::to_string(checked) + " shape/d combinations bounded";
  return out;
}

// 10. balance function range
Outcome criterion_phi_range() {
  Outcome out;
  long checked = 0;
  for (int n = 1; n <= 9; ++n)
    for (const Partition& outer : partitions_of(n))
      for (const Partition& inner : subdiagrams(outer))
        for (int d = std::max(outer.length(), 1); d <= 4; ++d) {
          SkewShape s(outer, inner, d);
          Rat phi = balance_phi(s);
          checked++;
          out.require(phi >= 1, "Phi < 1 on " + s.str());
          out.require(phi <= pow_rat(Rat(d) * n, static_cast<unsigned long>(d * (d - 1) / 2)),
                      "Phi above (dN)^(d(d-1)/2) on " + s.str());
        }
  if (out.pass) out.detail = std::to_string(checked) + " shape/d combinations in range";
  return out;
}

// 11. sampler uniformity and Monte Carlo coverage
Outcome criterion_sampling() {
  Outcome out;
  SkewShape s = straight(Partition({3, 3}));
  std::map<std::string, long> freq;
  const long draws = 100000;
  for (long t = 0; t < draws; ++t) {
    TableauPath p = sample_tableau(s, 90000 + static_cast<std::uint64_t>(t));
    std::string key;
    for (std::size_t k = 1; k < p.states.size(); ++k)
      for (int i = 1; i <= 2; ++i)
        if (p.states[k].part(i) != p.states[k - 1].part(i)) key += static_cast<char>('0' + i);
    freq[key]++;
  }
  out.require(freq.size() == 5, "expected 5 distinct fillings of (3,3)");
  std::vector<long> observed;
  for (auto& [k, v] : freq) observed.push_back(v);
  double chi2 = oracle::chi_square(observed, std::vector<double>(5, 0.2), draws);
  out.require(chi2 < oracle::chi2_crit_999(4),
              "chi-square " + std::to_string(chi2) + " rejects uniformity at p=0.001");

  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    McPairEstimate e = mc_prob_before(s, Cell{1, 2}, Cell{2, 1}, 10000, seed);
    if (std::abs(e.estimate_approx - 0.6) <= e.hoeffding_halfwidth_approx) covered++;
  }
  out.require(covered >= 95, "band covered the exact 3/5 only " + std::to_string(covered) + "/100");
  if (out.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "chi2=%.3f over 5 outcomes; band coverage %d/100", chi2, covered);
    out.detail = buf;
  }
  return out;
}

// 12. biased-walk success probability: closed form vs Monte Carlo
Outcome criterion_walk_success() {
  Outcome out;
  const std::vector<SkewShape> shapes = {
      straight(Partition({1, 1})),
      straight(Partition({2, 1})),
      straight(Partition({2, 2})),
      straight(Partition({3, 2})),
      straight(Partition({3, 3})),
      straight(Partition({2, 2, 1})),
      straight(Partition({3, 2, 1})),
      SkewShape(Partition({4, 3}), Partition({1})),
      SkewShape(Partition({3, 3, 2}), Partition({1, 1})),
      SkewShape(Partition({4, 2}), Partition({1}))};
  double worst_floor = 0;
  for (const SkewShape& s : shapes) {
    WalkSuccessEstimate e = estimate_walk_success(s, 20000, 77);
    double exact = mpq_get_d(walk_success_exact(s).get_mpq_t());
    out.require(std::abs(e.estimate_approx - exact) <= e.hoeffding_halfwidth_approx,
                "estimate leaves the band on " + s.str());
    worst_floor = std::max(worst_floor, e.lemma_floor_approx / std::max(exact, 1e-300));
  }
  if (out.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "10 shapes in band; max floor/exact ratio %.3f (floor is report-only)", worst_floor);
    out.detail = buf;
  }
  return out;
}

// 13. elementary inequality grid
Outcome criterion_inequality_grid() {
  Outcome out;
  SuiteParams p;
  p.n_max = 10;
  p.trials = 10000;
  SuiteReport r = run_suite("inequality_suite", p);
  out.require(r.verdict == Verdict::pass,
              r.violations.empty() ? "suite failed"
                                   : r.violations[0].first + ": " + r.violations[0].second);
  if (out.pass)
    out.detail = "zero violations over " + std::to_string(r.instances) + " grid points";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "method agreement up to size 10", criterion_method_agreement},
      {2, "one-third bound with first-row/column witnesses up to size 14",
       [] { return criterion_from_suite("one_third", 14); }},
      {3, "q-sequence monotone and normalized up to size 14",
       [] { return criterion_from_suite("q_monotone", 14); }},
      {4, "excited-diagram sandwich up to size 9",
       [] { return criterion_from_suite("sandwich", 9); }},
      {5, "two-chain family exact delta up to n=200",
       [] { return criterion_from_suite("two_chain", 200); }},
      {6, "(n,2)/(2) family minimizer location and n*delta cap", criterion_n2},
      {7, "(2m,m) family sqrt(n)*delta capped and trending down", criterion_thick_family},
      {8, "Catalan family sqrt(n)*delta decreasing", criterion_catalan},
      {9, "Schur ratio and interval bounds up to size 9", criterion_schur_bounds},
      {10, "balance function range up to size 9", criterion_phi_range},
      {11, "sampler uniformity and Hoeffding coverage", criterion_sampling},
      {12, "biased-walk success probability closed form", criterion_walk_success},
      {13, "elementary inequality grid", criterion_inequality_grid},
  };

  int failures = 0;
  for (const Entry& e : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = e.run();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (!out.pass) failures++;
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", out.pass ? "PASS" : "FAIL", e.id, e.name,
                static_cast<long long>(ms), out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
