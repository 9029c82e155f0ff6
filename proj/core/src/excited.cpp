#include "syt/excited.hpp"

#include <algorithm>
#include <set>

namespace syt {

namespace {

struct FlaggedEnumerator {
  const Partition& inner;
  const Partition& outer;
  int d;
  FlaggedTableau work;
  const std::function<void(const FlaggedTableau&)>& visit;

  bool flag_ok(int i, int j, int t) const {
    return static_cast<long>(j) + t - i <= outer.part(t);
  }

  void fill(int i, int j) {
    if (i > inner.length()) {
      visit(work);
      return;
    }
    int ni = i, nj = j + 1;
    if (nj > inner.part(i)) {
      ni = i + 1;
      nj = 1;
    }
    int lo = i;
    if (j > 1) lo = std::max(lo, work.at(i, j - 1));
    if (i > 1 && inner.part(i - 1) >= j) lo = std::max(lo, work.at(i - 1, j) + 1);
    for (int t = lo; t <= d; ++t) {
      if (!flag_ok(i, j, t)) continue;
      work.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = t;
      fill(ni, nj);
    }
  }
};

}  // namespace

void flagged_tableaux(const SkewShape& s,
                      const std::function<void(const FlaggedTableau&)>& visit) {
  FlaggedTableau work;
  work.rows.resize(static_cast<std::size_t>(s.inner().length()));
  for (int i = 1; i <= s.inner().length(); ++i)
    work.rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(s.inner().part(i)));
  FlaggedEnumerator e{s.inner(), s.outer(), s.rows(), std::move(work), visit};
  e.fill(1, 1);
}

std::vector<FlaggedTableau> flagged_tableaux(const SkewShape& s) {
  std::vector<FlaggedTableau> out;
  flagged_tableaux(s, [&](const FlaggedTableau& t) { out.push_back(t); });
  return out;
}

ExcitedDiagram flagged_to_excited(const FlaggedTableau& t, const SkewShape& s) {
  ExcitedDiagram d;
  for (int i = 1; i <= s.inner().length(); ++i)
    for (int j = 1; j <= s.inner().part(i); ++j) {
      int r = t.at(i, j);
      d.cells.push_back(Cell{r, j + r - i});
    }
  std::sort(d.cells.begin(), d.cells.end());
  return d;
}

std::vector<ExcitedDiagram> excited_diagrams_bfs(const SkewShape& s) {
  ExcitedDiagram start;
  for (int i = 1; i <= s.inner().length(); ++i)
    for (int j = 1; j <= s.inner().part(i); ++j) start.cells.push_back(Cell{i, j});
  std::sort(start.cells.begin(), start.cells.end());

  std::set<std::vector<Cell>> seen;
  std::vector<ExcitedDiagram> out;
  std::vector<ExcitedDiagram> queue{start};
  seen.insert(start.cells);
  while (!queue.empty()) {
    ExcitedDiagram cur = std::move(queue.back());
    queue.pop_back();
    std::set<Cell> in(cur.cells.begin(), cur.cells.end());
    for (const Cell& c : cur.cells) {
      Cell se{c.row + 1, c.col + 1};
      if (!s.outer().contains_cell(se)) continue;
      if (in.count(Cell{c.row + 1, c.col}) || in.count(Cell{c.row, c.col + 1}) || in.count(se))
        continue;
      ExcitedDiagram next = cur;
      auto it = std::find(next.cells.begin(), next.cells.end(), c);
      *it = se;
      std::sort(next.cells.begin(), next.cells.end());
      if (seen.insert(next.cells).second) queue.push_back(next);
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<long>> hook_table(const Partition& p) {
  const Partition conj = p.conjugate();
  std::vector<std::vector<long>> h(static_cast<std::size_t>(p.length()));
  for (int i = 1; i <= p.length(); ++i) {
    h[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(p.part(i)));
    for (long j = 1; j <= p.part(i); ++j)
      h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          p.part(i) - j + conj.part(static_cast<int>(j)) - i + 1;
  }
  return h;
}

}  // namespace

Int count_nhlf(const SkewShape& s) {
  const auto hooks = hook_table(s.outer());
  Rat sum(0);
  flagged_tableaux(s, [&](const FlaggedTableau& t) {
    ExcitedDiagram d = flagged_to_excited(t, s);
    std::set<Cell> in(d.cells.begin(), d.cells.end());
    Rat term(1);
    for (int i = 1; i <= s.outer().length(); ++i)
      for (long j = 1; j <= s.outer().part(i); ++j) {
        Cell c{i, static_cast<int>(j)};
        if (in.count(c)) continue;
        term /= hooks[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      }
    sum += term;
  });
  Rat v = sum * factorial(static_cast<unsigned long>(s.size()));
  return rat_to_int(v, "count_nhlf");
}

Int count_nhlf_flagged(const SkewShape& s) {
  const auto hooks = hook_table(s.outer());
  Int hook_sum = 0;
  flagged_tableaux(s, [&](const FlaggedTableau& t) {
    Int term = 1;
    for (int i = 1; i <= s.inner().length(); ++i)
      for (int j = 1; j <= s.inner().part(i); ++j) {
        int r = t.at(i, j);
        term *= hooks[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j + r - i - 1)];
      }
    hook_sum += term;
  });
  Int all_hooks = 1;
  for (const auto& row : hooks)
    for (long h : row) all_hooks *= h;
  Int num = factorial(static_cast<unsigned long>(s.size())) * hook_sum;
  return exact_div(num, all_hooks, "count_nhlf_flagged");
}

Int excited_count(const SkewShape& s) {
  Int n = 0;
  flagged_tableaux(s, [&](const FlaggedTableau&) { n += 1; });
  return n;
}

}  // namespace syt
