#include "syt/partition.hpp"

#include <algorithm>
#include <numeric>

namespace syt {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) fail(errc::not_weakly_decreasing, "negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail(errc::not_weakly_decreasing, "parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<long> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_[0]), 0);
    for (long p : parts_)
      for (long j = 0; j < p; ++j) cols[static_cast<std::size_t>(j)]++;
  }
  return Partition(std::move(cols));
}

Partition Partition::grown(int row) const {
  std::vector<long> v = parts_;
  if (row == length() + 1)
    v.push_back(1);
  else
    v[static_cast<std::size_t>(row - 1)]++;
  return Partition(std::move(v));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

long hook_length(const Partition& p, Cell c) {
  if (!p.contains_cell(c)) fail(errc::cell_outside_diagram, "hook_length: cell outside diagram");
  long col_len = 0;
  for (int i = 1; i <= p.length(); ++i)
    if (p.part(i) >= c.col) col_len++;
  return p.part(c.row) - c.col + col_len - c.row + 1;
}

std::vector<long> shifted_parts(const Partition& p, int d) {
  if (p.length() > d) fail(errc::d_too_small, "shifted_parts: d < number of parts");
  std::vector<long> v(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) v[static_cast<std::size_t>(i - 1)] = p.part(i) + d - i;
  return v;
}

namespace {

void gen_parts(int n, long max_part, int max_len, std::vector<long>& acc,
               std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_len == 0) return;
  for (long a = std::min<long>(max_part, n); a >= 1; --a) {
    acc.push_back(a);
    gen_parts(n - static_cast<int>(a), a, max_len - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int d) {
  std::vector<Partition> out;
  std::vector<long> acc;
  if (n == 0) out.emplace_back(acc);
  if (n > 0 && d > 0) gen_parts(n, n, d, acc, out);
  return out;
}

std::vector<Partition> subdiagrams(const Partition& p) {
  std::vector<std::vector<long>> rows;
  std::vector<long> acc;
  // row-by-row enumeration of mu with mu_i <= min(p_i, mu_{i-1})
  struct Rec {
    const Partition& p;
    std::vector<std::vector<long>>& rows;
    void go(int i, long prev, std::vector<long>& acc) {
      rows.push_back(acc);
      if (i > p.length()) return;
      for (long v = 1; v <= std::min(prev, p.part(i)); ++v) {
        acc.push_back(v);
        go(i + 1, v, acc);
        acc.pop_back();
      }
    }
  } rec{p, rows};
  rec.go(1, p.part(1), acc);

  std::vector<Partition> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

}  // namespace syt
