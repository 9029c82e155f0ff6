#pragma once

#include <string>
#include <vector>

#include "syt/partition.hpp"

namespace syt {

// Skew diagram outer/inner with an explicit ambient row count d. Several
// formulas (Frobenius, the balance function, Schur bounds) depend on d, so
// it travels with the shape; it defaults to length(outer).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  SkewShape(Partition outer, Partition inner, int d);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return d_; }
  long size() const { return outer_.size() - inner_.size(); }

  bool contains_cell(Cell c) const {
    return outer_.contains_cell(c) && c.col > inner_.part(c.row);
  }

  // skew cells in row-major order
  std::vector<Cell> cells() const;

  std::string str() const;  // canonical display form [a,b,c]/[d,e]

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
  int d_ = 0;
};

// Grammar: `L` or `L/M` where each side is a comma list or bracketed list of
// nonnegative integers; an optional ` d=<k>` suffix fixes the ambient row
// count. Examples: "4,3,1", "[5,5,4,2]/[3,2]", "[3,3]/[1] d=3".
SkewShape parse_shape(const std::string& text);

}  // namespace syt
