#pragma once

#include <functional>
#include <vector>

#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

// Semistandard filling of the inner diagram with entries <= rows(), subject
// to the flag condition  j + T(i,j) - i <= outer_{T(i,j)}.
struct FlaggedTableau {
  std::vector<std::vector<int>> rows;  // rows[i-1][j-1] = T(i,j)

  int at(int i, int j) const {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  friend auto operator<=>(const FlaggedTableau&, const FlaggedTableau&) = default;
};

// Subset of outer's cells with the same diagonal multiset as inner, reachable
// from inner by southeast excited moves.
struct ExcitedDiagram {
  std::vector<Cell> cells;  // sorted row-major

  friend auto operator<=>(const ExcitedDiagram&, const ExcitedDiagram&) = default;
};

// Streams flagged tableaux in lexicographic row-major order, each exactly once.
void flagged_tableaux(const SkewShape& s, const std::function<void(const FlaggedTableau&)>& visit);
std::vector<FlaggedTableau> flagged_tableaux(const SkewShape& s);

// cell (i,j) of inner moves T(i,j)-i steps down its southeast diagonal
ExcitedDiagram flagged_to_excited(const FlaggedTableau& t, const SkewShape& s);

// Closure of {inner} under moves (i,j) -> (i+1,j+1), legal when (i+1,j),
// (i,j+1), (i+1,j+1) are all outside the diagram and the target stays inside
// outer. Cross-check for the flagged enumeration.
std::vector<ExcitedDiagram> excited_diagrams_bfs(const SkewShape& s);

// n! * sum over excited diagrams D of prod_{cells of outer minus D} 1/hook
Int count_nhlf(const SkewShape& s);

// n! * [prod over outer of 1/hook] * sum over flagged T of
// prod_{(i,j) in inner} hook(T(i,j), j+T(i,j)-i)
Int count_nhlf_flagged(const SkewShape& s);

// |ED| = |FT|, via the flagged enumeration
Int excited_count(const SkewShape& s);

}  // namespace syt
