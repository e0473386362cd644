#pragma once

#include "mbh/int_matrix.hpp"

namespace mbh {

// Smith normal form U * M * V = S, with S diagonal, diagonal entries
// non-negative and forming a divisibility chain d1 | d2 | ...
// U and V are unimodular; their inverses are tracked alongside so callers can
// change bases in both directions without solving linear systems.
struct SmithResult {
    IntMatrix S;
    IntMatrix U, U_inv; // rows x rows
    IntMatrix V, V_inv; // cols x cols
    int rank = 0;       // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

// Rank over the rationals, computed independently by fraction-free row
// reduction.  Used as a cross-check and by the homology routines.
int rational_rank(const IntMatrix& M);

} // namespace mbh
