#pragma once

#include <functional>
#include <vector>

#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

// Cells addable to nu while staying inside outer (covers of nu in the
// interval of Young's lattice below outer).
std::vector<Cell> addable_cells(const Partition& nu, const Partition& outer);

// Streams every partition nu with inner <= nu <= outer exactly once,
// graded by size so that each nu appears after all of its subdiagrams.
void order_ideals(const SkewShape& s, const std::function<void(const Partition&)>& visit);

// Materialized interval [inner, outer] of Young's lattice, size-graded.
// States are stored as fixed-width row vectors; levels index states by
// |nu| - |inner|. Lexicographically decreasing order inside a level keeps
// every traversal deterministic.
class IdealLattice {
 public:
  explicit IdealLattice(const SkewShape& s);

  const SkewShape& shape() const { return shape_; }
  long levels() const { return static_cast<long>(level_of_.size()); }
  std::size_t states() const { return states_.size(); }
  const std::vector<long>& state(std::size_t idx) const { return states_[idx]; }
  const std::vector<std::size_t>& level(long t) const {
    return level_of_[static_cast<std::size_t>(t)];
  }

  // index of nu + e_row, or npos when the grown state leaves the interval
  std::size_t up(std::size_t idx, int row) const {
    return up_[idx * static_cast<std::size_t>(width_) + static_cast<std::size_t>(row - 1)];
  }
  int width() const { return width_; }

  std::size_t index_of(const std::vector<long>& state) const;

  // number of maximal chains inner -> state, per state
  std::vector<Int> paths_from_bottom() const;
  // number of maximal chains state -> outer, per state
  std::vector<Int> paths_to_top() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  SkewShape shape_;
  int width_;  // rows tracked = max(length(outer), 1)
  std::vector<std::vector<long>> states_;
  std::vector<std::vector<std::size_t>> level_of_;
  std::vector<std::size_t> up_;
};

}  // namespace syt
