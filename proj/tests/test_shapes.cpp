#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "syt/ideals.hpp"
#include "syt/partition.hpp"
#include "syt/skew.hpp"

using namespace syt;

TEST_SUITE_BEGIN("shapes");

TEST_CASE("parse_shape grammar") {
  SkewShape s = parse_shape("4,3,1");
  CHECK(s.outer().parts() == std::vector<long>{4, 3, 1});
  CHECK(s.inner().empty());
  CHECK(s.rows() == 3);

  s = parse_shape("[5,5,4,2]/[3,2]");
  CHECK(s.outer().parts() == std::vector<long>{5, 5, 4, 2});
  CHECK(s.inner().parts() == std::vector<long>{3, 2});
  CHECK(s.rows() == 4);
  CHECK(s.size() == 11);
  CHECK(s.str() == "[5,5,4,2]/[3,2]");

  s = parse_shape("[3,3]/[1] d=4");
  CHECK(s.rows() == 4);

  CHECK_THROWS_AS(parse_shape("2,1/3"), error);
  CHECK_THROWS_WITH_AS(parse_shape("2,1/3"), doctest::Contains("inner not contained"), error);
  CHECK_THROWS_AS(parse_shape("1,2"), error);       // not weakly decreasing
  CHECK_THROWS_AS(parse_shape("[3,"), error);       // malformed
  CHECK_THROWS_AS(parse_shape("a,b"), error);       // malformed
  CHECK_THROWS_AS(parse_shape(""), error);          // malformed
  CHECK_THROWS_AS(parse_shape("[3,3] d=1"), error); // d too small
}

TEST_CASE("trailing zeros normalize away") {
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition({3, 2, 0}).length() == 2);
  CHECK(parse_shape("[5,5,4,2]/[3,2,0,0]").inner() == Partition({3, 2}));
}

TEST_CASE("conjugate") {
  CHECK(Partition({4, 3, 1}).conjugate() == Partition({3, 2, 2, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  for (int n = 0; n <= 9; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("hook lengths") {
  CHECK(hook_length(Partition({4, 3, 1}), Cell{1, 1}) == 6);
  CHECK(hook_length(Partition({2, 2}), Cell{2, 2}) == 1);
  CHECK(hook_length(Partition({2, 1}), Cell{1, 1}) == 3);
  CHECK_THROWS_AS(hook_length(Partition({2, 1}), Cell{2, 2}), error);
}

TEST_CASE("hook multiset is conjugation invariant") {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& p : partitions_of(n)) {
      std::multiset<long> hooks, hooks_conj;
      long cells = 0;
      for (int i = 1; i <= p.length(); ++i)
        for (long j = 1; j <= p.part(i); ++j) {
          hooks.insert(hook_length(p, Cell{i, static_cast<int>(j)}));
          cells++;
        }
      const Partition c = p.conjugate();
      for (int i = 1; i <= c.length(); ++i)
        for (long j = 1; j <= c.part(i); ++j)
          hooks_conj.insert(hook_length(c, Cell{i, static_cast<int>(j)}));
      CHECK(cells == p.size());
      CHECK(hooks == hooks_conj);
    }
}

TEST_CASE("shifted parts") {
  CHECK(shifted_parts(Partition({4, 2}), 2) == std::vector<long>{5, 2});
  CHECK(shifted_parts(Partition{}, 3) == std::vector<long>{2, 1, 0});
  CHECK(shifted_parts(Partition({2, 1}), 2) == std::vector<long>{3, 1});
  CHECK_THROWS_AS(shifted_parts(Partition({1, 1, 1}), 2), error);
  // strictly decreasing
  for (const Partition& p : partitions_of(7))
    for (int d = p.length(); d <= p.length() + 2; ++d) {
      auto v = shifted_parts(p, d);
      for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] > v[i]);
    }
}

TEST_CASE("order_ideals basics") {
  std::vector<Partition> seen;
  order_ideals(SkewShape(Partition({2, 2}), Partition{}),
               [&](const Partition& p) { seen.push_back(p); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == Partition{});
  CHECK(seen.back() == Partition({2, 2}));

  seen.clear();
  order_ideals(SkewShape(Partition({3, 1}), Partition({3, 1})),
               [&](const Partition& p) { seen.push_back(p); });
  CHECK(seen.size() == 1);

  seen.clear();
  order_ideals(SkewShape(Partition({2, 1}), Partition({1})),
               [&](const Partition& p) { seen.push_back(p); });
  CHECK(seen.size() == 4);
  CHECK(std::set<Partition>(seen.begin(), seen.end()) ==
        std::set<Partition>{Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})});
}

TEST_CASE("order_ideals is size graded and matches the interval scan") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& outer : partitions_of(n))
      for (const Partition& inner : subdiagrams(outer)) {
        SkewShape s(outer, inner);
        long prev_size = -1;
        std::set<Partition> seen;
        order_ideals(s, [&](const Partition& nu) {
          CHECK(nu.size() >= prev_size);
          prev_size = nu.size();
          CHECK(seen.insert(nu).second);  // exactly once
        });
        auto expected = oracle::interval_partitions(s);
        CHECK(seen.size() == expected.size());
        for (const Partition& nu : expected) CHECK(seen.count(nu) == 1);
        // closure under adding an addable cell
        for (const Partition& nu : seen)
          for (const Cell& c : addable_cells(nu, outer)) CHECK(seen.count(nu.grown(c.row)) == 1);
      }
}

TEST_CASE("addable cells") {
  CHECK(addable_cells(Partition{}, Partition({2, 2})) == std::vector<Cell>{Cell{1, 1}});
  CHECK(addable_cells(Partition({1}), Partition({2, 2})) ==
        std::vector<Cell>{Cell{1, 2}, Cell{2, 1}});
  CHECK(addable_cells(Partition({2, 2}), Partition({2, 2})).empty());
}

TEST_CASE("empty rows and disconnected shapes are handled") {
  // disconnected: (3,1)/(2) splits into two independent cells
  SkewShape s(Partition({3, 1}), Partition({2}));
  CHECK(s.size() == 2);
  CHECK(oracle::count_extensions(s) == 2);
  // empty middle row: (2,1,1)/(1,1) leaves rows 1 and 3 only
  SkewShape t(Partition({2, 1, 1}), Partition({1, 1}));
  CHECK(t.size() == 2);
  CHECK(t.cells() == std::vector<Cell>{Cell{1, 2}, Cell{3, 1}});
}

TEST_SUITE_END();
