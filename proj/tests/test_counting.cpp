#include <doctest.h>

#include "oracles.hpp"
#include "syt/counting.hpp"

using namespace syt;

namespace {
SkewShape straight(const Partition& p) { return SkewShape(p, Partition{}); }
}  // namespace

TEST_SUITE_BEGIN("counting");

TEST_CASE("hook length formula") {
  CHECK(count_hlf(Partition({4, 3, 1})) == 70);
  CHECK(count_hlf(Partition({3, 3})) == 5);  // Catalan, m = 3
  CHECK(count_hlf(Partition({7})) == 1);
  CHECK(count_hlf(Partition{}) == 1);
}

TEST_CASE("Frobenius formula") {
  CHECK(count_frobenius(Partition({2, 1}), 2) == 2);
  CHECK(count_frobenius(Partition({3, 3}), 2) == 5);
  CHECK(count_frobenius(Partition({5}), 1) == 1);
  CHECK(count_frobenius(Partition({3, 3}), 4) == 5);  // padding rows changes nothing
  CHECK_THROWS_AS(count_frobenius(Partition({2, 1}), 1), error);
}

TEST_CASE("determinant formula") {
  CHECK(count_determinant(SkewShape(Partition({2, 2}), Partition({1}))) == 2);
  CHECK(count_determinant(straight(Partition({2, 2}))) == 2);
  CHECK(count_determinant(SkewShape(Partition({3, 1}), Partition({3, 1}))) == 1);
}

TEST_CASE("path counting") {
  CHECK(count_paths(SkewShape(Partition({4, 1}), Partition({1}))) == 4);
  CHECK(count_paths(SkewShape(Partition({2, 2}), Partition({1}))) == 2);
  CHECK(count_paths(straight(Partition({3, 3}))) == 5);
}

TEST_CASE("all methods agree with exhaustive enumeration") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& outer : partitions_of(n)) {
      const Int by_hlf = count_hlf(outer);
      CHECK(by_hlf == count_frobenius(outer, std::max(outer.length(), 1)));
      for (const Partition& inner : subdiagrams(outer)) {
        SkewShape s(outer, inner);
        Int expected = oracle::count_extensions(s);
        CHECK(count_paths(s) == expected);
        CHECK(count_determinant(s) == expected);
        if (inner.empty()) CHECK(by_hlf == expected);
      }
    }
}

TEST_CASE("hook product bound F") {
  CHECK(hook_bound(SkewShape(Partition({2, 2}), Partition({1}))) == make_rat(3L, 2L));
  CHECK(hook_bound(SkewShape(Partition({4, 2}), Partition({2, 1}))) == 3);
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n))
      CHECK(hook_bound(straight(p)) == Rat(count_hlf(p)));
}

TEST_CASE("F is a lower bound for the count") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& outer : partitions_of(n))
      for (const Partition& inner : subdiagrams(outer)) {
        SkewShape s(outer, inner);
        CHECK(hook_bound(s) <= Rat(count_paths(s)));
      }
}

TEST_CASE("gap bound G") {
  CHECK(gap_bound(SkewShape(Partition({2, 2}), Partition({1}), 2)) == 1);
  CHECK(gap_bound(SkewShape(Partition({4, 4}), Partition({1, 1}), 2)) == 4);  // 6!/(3!3!) * 1/5
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n))
      CHECK(gap_bound(straight(p)) == Rat(count_frobenius(p, std::max(p.length(), 1))));
}

TEST_CASE("balance function") {
  CHECK(balance_phi(SkewShape(Partition({2, 1}), Partition{}, 2)) == 1);
  CHECK(balance_phi(SkewShape(Partition({4, 2}), Partition({2, 1}), 2)) == make_rat(5L, 3L));
  // 1 <= Phi <= (d N)^{d(d-1)/2}
  for (int n = 1; n <= 8; ++n)
    for (const Partition& outer : partitions_of(n))
      for (const Partition& inner : subdiagrams(outer)) {
        SkewShape s(outer, inner);
        Rat phi = balance_phi(s);
        CHECK(phi >= 1);
        CHECK(phi <= pow_rat(Rat(s.rows()) * n,
                             static_cast<unsigned long>(s.rows() * (s.rows() - 1) / 2)));
      }
}

TEST_CASE("imbalance") {
  CHECK(imbalance(Partition({2, 1})) == make_rat(1L, 2L));
  CHECK(imbalance(Partition({6})) == 1);
  CHECK_THROWS_AS(imbalance(Partition({1})), error);
  for (int n = 2; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) {
      Rat q = imbalance(p);
      CHECK(q >= 0);
      CHECK(q <= 1);
      CHECK(q + imbalance(p.conjugate()) == 1);
      // equals the probability that the (1,2) corner is reached before (2,1)
      if (p.part(1) >= 2) {
        SkewShape skew(p, Partition({2}));
        CHECK(q == make_rat(count_paths(skew), count_paths(straight(p))));
      }
    }
}

TEST_CASE("off-diagonal hook sum identity") {
  // sum over cells (j+1, j) of their hooks equals n - first part
  for (int n = 1; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) {
      long sum = 0;
      for (int j = 1; j + 1 <= p.length(); ++j)
        if (p.part(j + 1) >= j) sum += hook_length(p, Cell{j + 1, j});
      CHECK(sum == n - p.part(1));
    }
}

TEST_CASE("rational serialization round-trips") {
  for (long num = -40; num <= 40; ++num)
    for (long den = 1; den <= 12; ++den) {
      Rat q = make_rat(num, den);
      CHECK(parse_rat(rat_str(q)) == q);
    }
  CHECK(rat_str(make_rat(3L, 6L)) == "1/2");
  CHECK(rat_str(Rat(7)) == "7");
}

TEST_CASE("path count cache is consistent") {
  clear_count_cache();
  SkewShape s(Partition({5, 3, 1}), Partition({2}));
  Int first = count_paths(s);
  CHECK(count_paths(s) == first);
  clear_count_cache();
  CHECK(count_paths(s) == first);
}

TEST_SUITE_END();
