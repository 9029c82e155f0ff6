#pragma once

#include <compare>
#include <string>
#include <vector>

#include "syt/errors.hpp"

namespace syt {

// 1-based cell of a Young diagram in English notation: row grows downward,
// column to the right.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition, stored normalized: weakly decreasing, no trailing
// zeros. Trailing zeros are accepted on input and stripped, so equality and
// memo keys see one canonical representative per partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  // 1-based part access; rows past length() read as 0.
  long part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  long size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  const std::vector<long>& parts() const { return parts_; }

  bool contains(const Partition& inner) const;
  bool contains_cell(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }

  Partition conjugate() const;

  // a partition with one extra cell in the given row (the cell must be addable)
  Partition grown(int row) const;

  std::string str() const;  // canonical display form [a,b,c]

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
  long size_ = 0;
};

// h(i,j) = arm + leg + 1. The cell must lie inside the diagram.
long hook_length(const Partition& p, Cell c);

// shifted values p_i + d - i for i = 1..d; requires length() <= d
std::vector<long> shifted_parts(const Partition& p, int d);

// All partitions of n in descending lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

// All partitions of n with at most d parts, descending lexicographic.
std::vector<Partition> partitions_of(int n, int d);

// All mu contained in p, graded by |mu| and descending-lex within a grade.
std::vector<Partition> subdiagrams(const Partition& p);

}  // namespace syt
