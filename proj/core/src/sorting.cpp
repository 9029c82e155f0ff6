#include "syt/sorting.hpp"

#include <algorithm>

#include "syt/counting.hpp"
#include "syt/ideals.hpp"

namespace syt {

namespace {

void check_cell(const SkewShape& s, Cell c, const char* who) {
  if (!s.contains_cell(c)) fail(errc::cell_outside_shape, std::string(who) + ": cell outside shape");
}

}  // namespace

Rat prob_before(const SkewShape& s, Cell x, Cell y) {
  check_cell(s, x, "prob_before");
  check_cell(s, y, "prob_before");
  if (x == y) fail(errc::equal_cells, "prob_before: cells must differ");

  IdealLattice lat(s);
  const auto below = lat.paths_from_bottom();
  const auto above = lat.paths_to_top();
  const Int total = below[lat.level(lat.levels() - 1)[0]];

  Int sum = 0;
  for (std::size_t idx = 0; idx < lat.states(); ++idx) {
    const auto& st = lat.state(idx);
    if (y.row > lat.width()) continue;
    if (st[static_cast<std::size_t>(y.row - 1)] != y.col - 1) continue;
    std::size_t u = lat.up(idx, y.row);
    if (u == IdealLattice::npos) continue;
    if (st[static_cast<std::size_t>(x.row - 1)] < x.col) continue;  // x not yet inserted
    sum += below[idx] * above[u];
  }
  return make_rat(sum, total);
}

Rat delta_pair(const SkewShape& s, Cell x, Cell y) {
  Rat p = prob_before(s, x, y);
  Rat d = 2 * p - 1;
  return d < 0 ? Rat(-d) : d;
}

long PairCounts::index_of(Cell c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c)
    fail(errc::cell_outside_shape, "PairCounts: cell outside shape");
  return static_cast<long>(it - cells.begin());
}

Rat PairCounts::prob_before(Cell x, Cell y) const {
  if (x == y) fail(errc::equal_cells, "PairCounts: cells must differ");
  const long n = size();
  return make_rat(before[static_cast<std::size_t>(index_of(x) * n + index_of(y))], total);
}

Rat PairCounts::delta(Cell x, Cell y) const {
  Rat d = 2 * prob_before(x, y) - 1;
  return d < 0 ? Rat(-d) : d;
}

PairCounts pair_counts(const SkewShape& s) {
  const long n = s.size();
  IdealLattice lat(s);
  const auto below = lat.paths_from_bottom();
  const auto above = lat.paths_to_top();

  PairCounts pc;
  pc.cells = s.cells();
  pc.total = below[lat.level(lat.levels() - 1)[0]];
  pc.before.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Int(0));

  // cell (i,j) -> row_offset[i-1] + (j - inner_i - 1)
  std::vector<long> row_offset(static_cast<std::size_t>(lat.width()), 0);
  long off = 0;
  for (int i = 1; i <= lat.width(); ++i) {
    row_offset[static_cast<std::size_t>(i - 1)] = off;
    off += s.outer().part(i) - s.inner().part(i);
  }

  for (std::size_t idx = 0; idx < lat.states(); ++idx) {
    const auto& st = lat.state(idx);
    if (below[idx] == 0) continue;
    for (int r = 1; r <= lat.width(); ++r) {
      std::size_t u = lat.up(idx, r);
      if (u == IdealLattice::npos) continue;
      const long v_idx = row_offset[static_cast<std::size_t>(r - 1)] +
                         (st[static_cast<std::size_t>(r - 1)] - s.inner().part(r));
      Int w = below[idx] * above[u];
      for (int i = 1; i <= lat.width(); ++i) {
        const long lo = s.inner().part(i);
        Int* row = pc.before.data() +
                   static_cast<std::size_t>(row_offset[static_cast<std::size_t>(i - 1)]) *
                       static_cast<std::size_t>(n);
        for (long j = lo; j < st[static_cast<std::size_t>(i - 1)]; ++j)
          row[(j - lo) * n + v_idx] += w;
      }
    }
  }
  return pc;
}

SortingReport delta_poset(const SkewShape& s) {
  const long n = s.size();
  if (n < 2) fail(errc::too_small, "delta_poset: need at least two cells");

  const PairCounts pc = pair_counts(s);
  SortingReport rep;
  rep.pair_count = n * (n - 1) / 2;
  Int best_num = -1;
  for (long u = 0; u < n; ++u)
    for (long v = u + 1; v < n; ++v) {
      Int num = 2 * pc.before[static_cast<std::size_t>(u * n + v)] - pc.total;
      if (num < 0) num = -num;
      if (best_num < 0 || num < best_num) {
        best_num = num;
        rep.witnesses.clear();
      }
      if (num == best_num)
        rep.witnesses.emplace_back(pc.cells[static_cast<std::size_t>(u)],
                                   pc.cells[static_cast<std::size_t>(v)]);
    }
  rep.delta = make_rat(best_num, pc.total);
  return rep;
}

QSequence q_sequence(const Partition& p) {
  if (p.part(1) < 2)
    fail(errc::single_column_or_row, "q_sequence: needs cell (1,2), first part must be >= 2");
  QSequence q;
  const Int total = count_paths(SkewShape(p, Partition{}));
  for (int k = 1; k <= p.length(); ++k) {
    std::vector<long> hook(static_cast<std::size_t>(k), 1);
    hook[0] = 2;
    q.values.push_back(make_rat(count_paths(SkewShape(p, Partition(std::move(hook)))), total));
  }
  return q;
}

WarmupBounds warmup_bounds(const Partition& p) {
  const long n = p.size();
  if (n < 2) fail(errc::too_small, "warmup_bounds: |p| must be at least 2");
  WarmupBounds w;
  w.q = imbalance(p);
  Rat one_minus = 1 - w.q;
  Rat skewed = 2 * w.q - 1;
  if (skewed < 0) skewed = -skewed;
  w.thm_bound = std::min(std::min(w.q, one_minus), skewed);
  const long m = n - p.part(1);
  w.m_bound = make_rat(Int(m) * n + Int(m - 1) * (m - 2), Int(n) * (n - 1));
  return w;
}

Rat visit_prob(const SkewShape& s, long a, long b) {
  if (s.rows() < 2) fail(errc::out_of_range, "visit_prob: needs at least two rows");
  const long a_lo = s.inner().part(1), a_hi = s.outer().part(1);
  const long b_lo = s.inner().part(2), b_hi = s.outer().part(2);
  if (a < a_lo || a > a_hi || b < b_lo || b > b_hi)
    fail(errc::out_of_range, "visit_prob: coordinates outside the shape");

  IdealLattice lat(s);
  const Int total = count_paths(s);

  // paths that avoid every state with (first, second) = (a, b)
  std::vector<Int> dp(lat.states(), Int(0));
  auto banned = [&](std::size_t idx) {
    const auto& st = lat.state(idx);
    long first = st[0];
    long second = lat.width() >= 2 ? st[1] : 0;
    return first == a && second == b;
  };
  const std::size_t bottom = lat.level(0)[0];
  if (!banned(bottom)) dp[bottom] = 1;
  for (long t = 0; t < lat.levels() - 1; ++t)
    for (std::size_t idx : lat.level(t)) {
      if (dp[idx] == 0) continue;
      for (int r = 1; r <= lat.width(); ++r) {
        std::size_t u = lat.up(idx, r);
        if (u == IdealLattice::npos || banned(u)) continue;
        dp[u] += dp[idx];
      }
    }
  const Int avoid = dp[lat.level(lat.levels() - 1)[0]];
  return make_rat(total - avoid, total);
}

Rat max_visit_prob(const SkewShape& s, long a) {
  if (s.rows() < 2) fail(errc::out_of_range, "max_visit_prob: needs at least two rows");
  const long b_lo = s.inner().part(2), b_hi = s.outer().part(2);
  if (b_hi <= b_lo) fail(errc::out_of_range, "max_visit_prob: second row has no cells");
  Rat best(0);
  for (long k = b_lo + 1; k <= b_hi; ++k) best = std::max(best, visit_prob(s, a, k));
  return best;
}

}  // namespace syt
