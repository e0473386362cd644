#include "mbh/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>

namespace mbh {

namespace {

// Wraps the four transform matrices so every elementary operation on S is
// mirrored on U/V and inverted on U_inv/V_inv.
struct Worker {
    IntMatrix& S;
    IntMatrix& U;
    IntMatrix& Ui;
    IntMatrix& V;
    IntMatrix& Vi;

    void swap_rows(int i, int j) {
        if (i == j) return;
        S.swap_rows(i, j);
        U.swap_rows(i, j);
        Ui.swap_cols(i, j);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        S.swap_cols(i, j);
        V.swap_cols(i, j);
        Vi.swap_rows(i, j);
    }
    // row i += k * row j  (left multiplication by E; U_inv gets E^{-1} on the right)
    void add_row(int i, int j, const Int& k) {
        S.add_row(i, j, k);
        U.add_row(i, j, k);
        Ui.add_col(j, i, -k);
    }
    // col i += k * col j  (right multiplication; V_inv gets the inverse on the left)
    void add_col(int i, int j, const Int& k) {
        S.add_col(i, j, k);
        V.add_col(i, j, k);
        Vi.add_row(j, i, -k);
    }
    void negate_row(int i) {
        S.negate_row(i);
        U.negate_row(i);
        Ui.negate_col(i);
    }
};

bool find_pivot(const IntMatrix& S, int s, int& pr, int& pc) {
    // smallest nonzero absolute value in the trailing submatrix
    bool found = false;
    Int best;
    for (int i = s; i < S.rows(); ++i)
        for (int j = s; j < S.cols(); ++j) {
            if (S(i, j) == 0) continue;
            Int a = abs(S(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix& S, int s) {
    for (int i = s + 1; i < S.rows(); ++i)
        if (S(i, s) != 0) return false;
    for (int j = s + 1; j < S.cols(); ++j)
        if (S(s, j) != 0) return false;
    return true;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult r;
    r.S = M;
    r.U = IntMatrix::identity(M.rows());
    r.U_inv = IntMatrix::identity(M.rows());
    r.V = IntMatrix::identity(M.cols());
    r.V_inv = IntMatrix::identity(M.cols());
    Worker w{r.S, r.U, r.U_inv, r.V, r.V_inv};

    const int n = std::min(M.rows(), M.cols());
    for (int s = 0; s < n; ++s) {
        int pr, pc;
        if (!find_pivot(r.S, s, pr, pc)) break; // trailing submatrix is zero
        w.swap_rows(s, pr);
        w.swap_cols(s, pc);

        // Clear row and column s; each reduction step shrinks |S(s,s)| when a
        // remainder appears, so this terminates.
        while (true) {
            for (int i = s + 1; i < r.S.rows(); ++i) {
                if (r.S(i, s) == 0) continue;
                Int q = r.S(i, s) / r.S(s, s);
                w.add_row(i, s, -q);
            }
            for (int j = s + 1; j < r.S.cols(); ++j) {
                if (r.S(s, j) == 0) continue;
                Int q = r.S(s, j) / r.S(s, s);
                w.add_col(j, s, -q);
            }
            if (row_col_clear(r.S, s)) {
                // divisibility fix-up: pivot must divide the rest of the block
                int br = -1, bc = -1;
                for (int i = s + 1; i < r.S.rows() && br < 0; ++i)
                    for (int j = s + 1; j < r.S.cols(); ++j)
                        if (r.S(i, j) % r.S(s, s) != 0) {
                            br = i;
                            bc = j;
                            break;
                        }
                if (br < 0) break;
                w.add_row(s, br, Int(1));
                continue;
            }
            // residues remain; bring the new smallest entry to the pivot slot
            if (!find_pivot(r.S, s, pr, pc)) break;
            w.swap_rows(s, pr);
            w.swap_cols(s, pc);
        }

        if (r.S(s, s) < 0) w.negate_row(s);
    }

    for (int s = 0; s < n; ++s)
        if (r.S(s, s) != 0) ++r.rank;
    return r;
}

int rational_rank(const IntMatrix& M) {
    // Fraction-free Gaussian elimination (Bareiss-style pivoting without the
    // division step; exact since entries are big integers).
    IntMatrix A = M;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < A.rows(); ++i)
            if (A(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        A.swap_rows(row, piv);
        for (int i = row + 1; i < A.rows(); ++i) {
            if (A(i, col) == 0) continue;
            Int a = A(row, col), b = A(i, col);
            for (int j = col; j < A.cols(); ++j)
                A(i, j) = A(i, j) * a - A(row, j) * b;
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace mbh
