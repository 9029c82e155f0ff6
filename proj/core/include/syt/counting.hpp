#pragma once

#include "syt/ideals.hpp"
#include "syt/numbers.hpp"
#include "syt/skew.hpp"

namespace syt {

// Tableau counts by four independent routes. count_paths is the reference
// implementation: a size-graded DP over the ideal lattice; the product and
// determinant formulas must agree with it exactly.

// n! / prod of hooks, straight shapes only
Int count_hlf(const Partition& p);

// n!/(p_1!...p_d!) * prod_{i<j} (p_i-p_j+j-i)/(p_i+j-i)
Int count_frobenius(const Partition& p, int d);

// n! * det[ 1/(outer_i - inner_j - i + j)! ], with 1/k! := 0 for k < 0
Int count_determinant(const SkewShape& s);

// maximal-chain count inner -> outer in the ideal lattice; memoized on the
// normalized (outer, inner) pair, cache shared process-wide
Int count_paths(const SkewShape& s);

void clear_count_cache();

// n! * prod over skew cells of 1/h_outer(i,j); lower bound for the count
Rat hook_bound(const SkewShape& s);

// n!/prod (outer_i - inner_i)! * prod_{i<j} (outer_i-outer_j+j-i)/(outer_i+j-i)
Rat gap_bound(const SkewShape& s);

// prod_{i<j<=d} min{ inner_i-inner_j+j-i, (outer_i+d-i)/(outer_i-outer_j+j-i) }
Rat balance_phi(const SkewShape& s);

// (1/(n(n-1))) sum_{i<=j} h(i,i)*h(j,j+1), terms with a cell outside the
// diagram contributing zero; equals P[corner (1,2) is reached before (2,1)]
Rat imbalance(const Partition& p);

}  // namespace syt
