#include "syt/counting.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace syt {

Int count_hlf(const Partition& p) {
  Int hooks = 1;
  const Partition conj = p.conjugate();
  for (int i = 1; i <= p.length(); ++i)
    for (long j = 1; j <= p.part(i); ++j)
      hooks *= p.part(i) - j + conj.part(static_cast<int>(j)) - i + 1;
  return exact_div(factorial(static_cast<unsigned long>(p.size())), hooks, "count_hlf");
}

Int count_frobenius(const Partition& p, int d) {
  if (p.length() > d) fail(errc::d_too_small, "count_frobenius: d < number of parts");
  Rat r(factorial(static_cast<unsigned long>(p.size())));
  for (int i = 1; i <= d; ++i) r /= factorial(static_cast<unsigned long>(p.part(i)));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      r *= make_rat(p.part(i) - p.part(j) + j - i, p.part(i) + j - i);
  return rat_to_int(r, "count_frobenius");
}

namespace {

Rat inv_factorial_or_zero(long k) {
  if (k < 0) return Rat(0);
  return make_rat(Int(1), factorial(static_cast<unsigned long>(k)));
}

Rat det_gauss(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat factor = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

}  // namespace

Int count_determinant(const SkewShape& s) {
  const int r = s.outer().length();
  if (r == 0) return Int(1);
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(r),
                                  std::vector<Rat>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          inv_factorial_or_zero(s.outer().part(i) - s.inner().part(j) - i + j);
  Rat v = det_gauss(std::move(m)) * factorial(static_cast<unsigned long>(s.size()));
  return rat_to_int(v, "count_determinant");
}

namespace {

using CacheKey = std::pair<std::vector<long>, std::vector<long>>;
std::map<CacheKey, Int> g_path_cache;
std::shared_mutex g_path_cache_mutex;

}  // namespace

Int count_paths(const SkewShape& s) {
  CacheKey key{s.outer().parts(), s.inner().parts()};
  {
    std::shared_lock lock(g_path_cache_mutex);
    auto it = g_path_cache.find(key);
    if (it != g_path_cache.end()) return it->second;
  }
  IdealLattice lat(s);
  Int value = lat.paths_from_bottom()[lat.level(lat.levels() - 1)[0]];
  {
    std::unique_lock lock(g_path_cache_mutex);
    g_path_cache.emplace(std::move(key), value);
  }
  return value;
}

void clear_count_cache() {
  std::unique_lock lock(g_path_cache_mutex);
  g_path_cache.clear();
}

Rat hook_bound(const SkewShape& s) {
  Rat r(factorial(static_cast<unsigned long>(s.size())));
  const Partition conj = s.outer().conjugate();
  for (const Cell& c : s.cells())
    r /= s.outer().part(c.row) - c.col + conj.part(c.col) - c.row + 1;
  return r;
}

Rat gap_bound(const SkewShape& s) {
  const int d = s.rows();
  Rat r(factorial(static_cast<unsigned long>(s.size())));
  for (int i = 1; i <= d; ++i)
    r /= factorial(static_cast<unsigned long>(s.outer().part(i) - s.inner().part(i)));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      r *= make_rat(s.outer().part(i) - s.outer().part(j) + j - i, s.outer().part(i) + j - i);
  return r;
}

Rat balance_phi(const SkewShape& s) {
  const int d = s.rows();
  Rat phi(1);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      Rat a(s.inner().part(i) - s.inner().part(j) + j - i);
      Rat b = make_rat(s.outer().part(i) + d - i, s.outer().part(i) - s.outer().part(j) + j - i);
      phi *= std::min(a, b);
    }
  return phi;
}

Rat imbalance(const Partition& p) {
  const long n = p.size();
  if (n < 2) fail(errc::too_small, "imbalance: |p| must be at least 2");
  Int sum = 0;
  const int len = p.length();
  for (int i = 1; i <= len; ++i) {
    if (p.part(i) < i) continue;  // (i,i) outside
    long hi = hook_length(p, Cell{i, i});
    for (int j = i; j <= len; ++j) {
      if (p.part(j) < j + 1) continue;  // (j,j+1) outside
      sum += hi * hook_length(p, Cell{j, j + 1});
    }
  }
  return make_rat(sum, Int(n) * (n - 1));
}

}  // namespace syt
