#pragma once

#include "repstrata/layering.hpp"
#include "repstrata/rng.hpp"

namespace repstrata {

// the normalized local presentation: gram = identity, S = sum x_i^2
PresentationPtr canonical_local(int n, FieldSpec field);

// blocks (A_i, B_i, C_i) assembled into the 3-layer strictly upper
// triangular form with column bands (d2 | d1 | d0)
Representation assemble_local(PresentationPtr pres, const DimVec3& d, const std::vector<Matrix>& A,
                              const std::vector<Matrix>& B, const std::vector<Matrix>& C);

// radical layering (d0, 1, m) for 0 <= m <= n-1: A_i = e_i for i <= m,
// C_{m+1} = (1, 0, ..., 0)
Representation witness_dim1(int n, int m, int d0, FieldSpec field);

// radical layering (d0, m, m*n - 1) for 2 <= m <= n: stacked identity
// blocks plus the shifted block with corrections
Representation witness_dimgt1(int n, int m, int d0, FieldSpec field);

// the exceptional-component witness of dimension (n^2+n)(a-1)+1, with
// raddim (a, n(a-1), (n^2-1)(a-1)) and
// socdim ((n^2-1)(a-1), n(a-1)+1, a-1); a >= 2
Representation witness_exceptional(int n, int a, FieldSpec field);

// a representation with raddim exactly d, built from the root
// decomposition of (d1, d2): block-diagonal generator A-parts with
// rotated generator indices, a deterministic shared-column C first, then
// randomized C sampling from the relation kernel. Throws SearchError when
// the retry budget is exhausted, EmptyStratumError when the stratum is
// empty.
Representation witness_any(int n, const DimVec3& d, FieldSpec field, std::uint64_t seed,
                           int retryBudget = 100);

} // namespace repstrata
