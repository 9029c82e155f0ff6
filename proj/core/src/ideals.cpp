#include "syt/ideals.hpp"

#include <algorithm>
#include <map>

namespace syt {

std::vector<Cell> addable_cells(const Partition& nu, const Partition& outer) {
  if (!outer.contains(nu)) fail(errc::inner_not_contained, "addable_cells: nu not inside outer");
  std::vector<Cell> out;
  for (int i = 1; i <= nu.length() + 1; ++i) {
    long next = nu.part(i) + 1;
    if (next > outer.part(i)) continue;
    if (i > 1 && nu.part(i - 1) < next) continue;
    out.push_back(Cell{i, static_cast<int>(next)});
  }
  return out;
}

namespace {

std::vector<long> padded(const Partition& p, int width) {
  std::vector<long> v(static_cast<std::size_t>(width), 0);
  for (int i = 1; i <= p.length(); ++i) v[static_cast<std::size_t>(i - 1)] = p.part(i);
  return v;
}

}  // namespace

IdealLattice::IdealLattice(const SkewShape& s)
    : shape_(s), width_(std::max(s.outer().length(), 1)) {
  const std::vector<long> bottom = padded(s.inner(), width_);
  const std::vector<long> top = padded(s.outer(), width_);
  const long n = s.size();

  std::map<std::vector<long>, std::size_t> index;
  level_of_.assign(static_cast<std::size_t>(n + 1), {});

  std::vector<std::vector<long>> frontier{bottom};
  for (long t = 0; t <= n; ++t) {
    std::sort(frontier.begin(), frontier.end(), std::greater<>());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::vector<std::vector<long>> next;
    for (auto& st : frontier) {
      std::size_t idx = states_.size();
      index.emplace(st, idx);
      level_of_[static_cast<std::size_t>(t)].push_back(idx);
      if (t < n) {
        for (int r = 1; r <= width_; ++r) {
          long grown = st[static_cast<std::size_t>(r - 1)] + 1;
          if (grown > top[static_cast<std::size_t>(r - 1)]) continue;
          if (r > 1 && st[static_cast<std::size_t>(r - 2)] < grown) continue;
          auto up_state = st;
          up_state[static_cast<std::size_t>(r - 1)] = grown;
          next.push_back(std::move(up_state));
        }
      }
      states_.push_back(std::move(st));
    }
    frontier = std::move(next);
  }

  up_.assign(states_.size() * static_cast<std::size_t>(width_), npos);
  for (std::size_t idx = 0; idx < states_.size(); ++idx) {
    for (int r = 1; r <= width_; ++r) {
      long grown = states_[idx][static_cast<std::size_t>(r - 1)] + 1;
      if (grown > top[static_cast<std::size_t>(r - 1)]) continue;
      if (r > 1 && states_[idx][static_cast<std::size_t>(r - 2)] < grown) continue;
      auto up_state = states_[idx];
      up_state[static_cast<std::size_t>(r - 1)] = grown;
      up_[idx * static_cast<std::size_t>(width_) + static_cast<std::size_t>(r - 1)] =
          index.at(up_state);
    }
  }
}

std::size_t IdealLattice::index_of(const std::vector<long>& state) const {
  long sz = 0;
  for (long v : state) sz += v;
  long t = sz - shape_.inner().size();
  if (t < 0 || t >= levels()) return npos;
  const auto& lvl = level_of_[static_cast<std::size_t>(t)];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), state,
                             [this](std::size_t idx, const std::vector<long>& key) {
                               return states_[idx] > key;  // levels are stored descending
                             });
  if (it == lvl.end() || states_[*it] != state) return npos;
  return *it;
}

std::vector<Int> IdealLattice::paths_from_bottom() const {
  std::vector<Int> dp(states_.size(), Int(0));
  dp[level_of_[0][0]] = 1;
  for (long t = 0; t < levels() - 1; ++t) {
    for (std::size_t idx : level_of_[static_cast<std::size_t>(t)]) {
      if (dp[idx] == 0) continue;
      for (int r = 1; r <= width_; ++r) {
        std::size_t u = up(idx, r);
        if (u != npos) dp[u] += dp[idx];
      }
    }
  }
  return dp;
}

std::vector<Int> IdealLattice::paths_to_top() const {
  std::vector<Int> dp(states_.size(), Int(0));
  dp[level_of_.back()[0]] = 1;
  for (long t = levels() - 2; t >= 0; --t) {
    for (std::size_t idx : level_of_[static_cast<std::size_t>(t)]) {
      for (int r = 1; r <= width_; ++r) {
        std::size_t u = up(idx, r);
        if (u != npos) dp[idx] += dp[u];
      }
    }
  }
  return dp;
}

void order_ideals(const SkewShape& s, const std::function<void(const Partition&)>& visit) {
  IdealLattice lat(s);
  for (long t = 0; t < lat.levels(); ++t)
    for (std::size_t idx : lat.level(t)) {
      std::vector<long> v = lat.state(idx);
      visit(Partition(std::move(v)));
    }
}

}  // namespace syt
