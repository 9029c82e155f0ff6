#pragma once

#include <vector>

#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

struct SortingReport {
  Rat delta;                                   // min over unordered pairs of |2P - 1|
  std::vector<std::pair<Cell, Cell>> witnesses;  // minimizing pairs, row-major order
  long pair_count = 0;
};

// All-pairs order statistics from one sweep of the ideal lattice:
// before[u*n+v] counts the extensions that reach cell u before cell v,
// accumulated at the unique step that inserts v.
struct PairCounts {
  std::vector<Cell> cells;  // row-major
  Int total;                // number of extensions
  std::vector<Int> before;  // n x n, diagonal unused

  long size() const { return static_cast<long>(cells.size()); }
  long index_of(Cell c) const;
  Rat prob_before(Cell x, Cell y) const;
  Rat delta(Cell x, Cell y) const;
};

PairCounts pair_counts(const SkewShape& s);

// P[x is reached before y] under a uniform linear extension, by decomposing
// at the unique step that inserts y: sum over ideals nu with x inside, y
// addable, of paths(inner->nu) * paths(nu+y -> outer) / count.
Rat prob_before(const SkewShape& s, Cell x, Cell y);

// |2 prob_before - 1|; equals 1 for comparable pairs
Rat delta_pair(const SkewShape& s, Cell x, Cell y);

// Minimum of delta_pair over all unordered pairs, with every minimizing
// pair listed. A chain reports delta 1 with all pairs as witnesses.
SortingReport delta_poset(const SkewShape& s);

struct QSequence {
  std::vector<Rat> values;  // q_1..q_l, weakly decreasing, summing to 1
};

// q_k = P[first-column entry (k,1) is the last one reached before (1,2)],
// computed as count(p / (2,1^{k-1})) / count(p)
QSequence q_sequence(const Partition& p);

struct WarmupBounds {
  Rat q;          // imbalance
  Rat thm_bound;  // min{q, 1-q, |1-2q|}
  Rat m_bound;    // (m n + (m-1)(m-2)) / (n(n-1)) with m = n - p_1
};

WarmupBounds warmup_bounds(const Partition& p);

// P[the growth walk visits a state with first coordinate a and second
// coordinate b], via complement counting over the ideal lattice. Accepts the
// boundary b = inner_2 (the k = inner_2 term of the partial-sum identity).
Rat visit_prob(const SkewShape& s, long a, long b);

// max over inner_2 < k <= outer_2 of visit_prob(s, a, k); twice this value
// bounds the sorting probability
Rat max_visit_prob(const SkewShape& s, long a);

}  // namespace syt
