#pragma once
// Independent brute-force homology oracle for the tests.  Deliberately avoids
// the library's Smith normal form machinery: ranks come from fraction-free
// Gaussian elimination, invariant factors from gcds of k x k minors.

#include "mbh/homology.hpp"
#include "mbh/int_matrix.hpp"

#include <numeric>
#include <vector>

namespace oracle {

using mbh::Int;
using mbh::IntMatrix;

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Rank by fraction-free (Bareiss-style) elimination over exact integers.
inline int rank(IntMatrix m) {
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) m.swap_rows(pivot, r);
        for (int i = r + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j)
                m(i, j) = (m(i, j) * m(r, col) - m(i, col) * m(r, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    return r;
}

// Determinant by Bareiss elimination (exact integer divisions).
inline Int det(IntMatrix m) {
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return Int(sign) * m(n - 1, n - 1);
}

// gcd of all k x k minors (0 when all vanish); D_0 = 1.
inline Int determinantal_divisor(const IntMatrix& m, int k) {
    if (k == 0) return 1;
    if (k > m.rows() || k > m.cols()) return 0;
    std::vector<int> rows(size_t(k), 0), cols(size_t(k), 0);
    std::iota(rows.begin(), rows.end(), 0);
    Int g = 0;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k2 = int(s.size());
        for (int i = k2 - 1; i >= 0; --i)
            if (s[size_t(i)] < n - (k2 - i)) {
                ++s[size_t(i)];
                for (int j = i + 1; j < k2; ++j) s[size_t(j)] = s[size_t(j - 1)] + 1;
                return true;
            }
        return false;
    };
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub(i, j) = m(rows[size_t(i)], cols[size_t(j)]);
            g = gcd(g, det(sub));
            if (g == 1) return g;
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return g;
}

// Invariant factors d_1 | d_2 | ... of an integer matrix, all positive.
// The elimination rank bounds the minor enumeration: beyond it every minor
// vanishes, so the subsets need not be enumerated at all.
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
    std::vector<Int> out;
    Int prev = 1;
    const int r = rank(m);
    for (int k = 1; k <= r; ++k) {
        Int dk = determinantal_divisor(m, k);
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

struct Group {
    int betti = 0;
    std::vector<Int> torsion;
};

// H_k = Z^{c_k - r_k - r_{k+1}} + torsion from the invariant factors of
// d_{k+1} that exceed 1.
inline std::vector<Group> homology(const mbh::GradedBoundaryMatrices& b) {
    std::vector<Group> out;
    for (int k = 0; k <= b.top(); ++k) {
        Group g;
        g.betti = b.dim_at(k) - rank(b.d_at(k)) - rank(b.d_at(k + 1));
        for (const Int& d : invariant_factors(b.d_at(k + 1)))
            if (d >= 2) g.torsion.push_back(d);
        out.push_back(std::move(g));
    }
    return out;
}

inline bool matches(const std::vector<Group>& o, const mbh::HomologyGroups& h) {
    if (o.size() != h.groups.size()) return false;
    for (size_t k = 0; k < o.size(); ++k)
        if (o[k].betti != h.groups[k].betti || o[k].torsion != h.groups[k].torsion)
            return false;
    return true;
}

} // namespace oracle
