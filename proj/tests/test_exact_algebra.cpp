#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbh/smith.hpp"
#include "oracle.hpp"

#include <random>

using namespace mbh;

namespace {

void check_snf(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    CHECK(r.U * m * r.V == r.S);
    CHECK(r.U * r.U_inv == IntMatrix::identity(m.rows()));
    CHECK(r.U_inv * r.U == IntMatrix::identity(m.rows()));
    CHECK(r.V * r.V_inv == IntMatrix::identity(m.cols()));
    CHECK(r.V_inv * r.V == IntMatrix::identity(m.cols()));
    // diagonal, non-negative, divisibility chain
    for (int i = 0; i < r.S.rows(); ++i)
        for (int j = 0; j < r.S.cols(); ++j)
            if (i != j) CHECK(r.S(i, j) == 0);
    const int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) CHECK(r.S(i, i) >= 0);
    for (int i = 0; i + 1 < n; ++i)
        if (r.S(i + 1, i + 1) != 0) {
            CHECK(r.S(i, i) != 0);
            CHECK(r.S(i + 1, i + 1) % r.S(i, i) == 0);
        }
    // rank and invariant factors against the minor-gcd oracle
    CHECK(r.rank == oracle::rank(m));
    std::vector<Int> inv = oracle::invariant_factors(m);
    CHECK(int(inv.size()) == r.rank);
    for (int i = 0; i < r.rank; ++i) CHECK(r.S(i, i) == inv[size_t(i)]);
    // transforms are unimodular
    if (m.rows() > 0) {
        Int du = oracle::det(r.U);
        CHECK((du == 1 || du == -1));
    }
    if (m.cols() > 0) {
        Int dv = oracle::det(r.V);
        CHECK((dv == 1 || dv == -1));
    }
}

} // namespace

TEST_CASE("smith normal form of a textbook matrix") {
    IntMatrix m{{2, 4}, {6, 8}};
    SmithResult r = smith_normal_form(m);
    CHECK(r.rank == 2);
    CHECK(r.S(0, 0) == 2);
    CHECK(r.S(1, 1) == 4);
    check_snf(m);
}

TEST_CASE("smith normal form edge cases") {
    check_snf(IntMatrix(0, 0));
    check_snf(IntMatrix(0, 3));
    check_snf(IntMatrix(3, 0));
    check_snf(IntMatrix(2, 2)); // zero matrix
    check_snf(IntMatrix{{5}});
    check_snf(IntMatrix{{-7}});
    check_snf(IntMatrix{{0, 1}, {1, 0}});
    check_snf(IntMatrix{{2, 0}, {0, 3}}); // needs the divisibility fix-up
    check_snf(IntMatrix{{6, 10}, {15, 4}});
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(0, 6), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("rational rank matches the elimination oracle") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(0, 7), entry(-5, 5);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        CHECK(rational_rank(m) == oracle::rank(m));
    }
    CHECK(rational_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("matrix arithmetic") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
    CHECK(a + b - b == a);
    CHECK(IntMatrix::identity(2) * a == a);
    CHECK(IntMatrix(2, 2).is_zero());
    IntMatrix c = a;
    c.swap_rows(0, 1);
    CHECK(c == IntMatrix{{3, 4}, {1, 2}});
    c = a;
    c.add_row(1, 0, Int(-3));
    CHECK(c == IntMatrix{{1, 2}, {0, -2}});
    c = a;
    c.negate_col(1);
    CHECK(c == IntMatrix{{1, -2}, {3, -4}});
}

TEST_CASE("homology of explicit small complexes against the oracle") {
    // circle: two vertices, two edges
    GradedBoundaryMatrices circle;
    circle.dims = {2, 2};
    circle.d.push_back(IntMatrix(0, 2));
    circle.d.push_back(IntMatrix{{1, -1}, {-1, 1}});
    circle.check_composition();
    HomologyGroups h = homology_of_complex(circle);
    CHECK(h.to_string() == "H_0=Z H_1=Z");
    CHECK(oracle::matches(oracle::homology(circle), h));

    // real projective plane style presentation: H_1 = Z/2
    GradedBoundaryMatrices rp2;
    rp2.dims = {1, 1, 1};
    rp2.d.push_back(IntMatrix(0, 1));
    rp2.d.push_back(IntMatrix{{0}});
    rp2.d.push_back(IntMatrix{{2}});
    rp2.check_composition();
    h = homology_of_complex(rp2);
    CHECK(h.to_string() == "H_0=Z H_1=Z/2 H_2=0");
    CHECK(oracle::matches(oracle::homology(rp2), h));
}

TEST_CASE("homology of random complexes matches the oracle") {
    // build d[k+1] with columns in ker d[k] (via SNF) so composition is zero
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 5), entry(-3, 3), pick(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        GradedBoundaryMatrices b;
        int c0 = dim(rng), c1 = dim(rng), c2 = dim(rng);
        b.dims = {c0, c1, c2};
        IntMatrix d1(c0, c1);
        for (int i = 0; i < c0; ++i)
            for (int j = 0; j < c1; ++j) d1(i, j) = entry(rng);
        b.d.push_back(IntMatrix(0, c0));
        b.d.push_back(d1);
        SmithResult s = smith_normal_form(d1);
        IntMatrix d2(c1, c2);
        const int z = c1 - s.rank; // kernel dimension
        for (int j = 0; j < c2; ++j) {
            if (z == 0) continue;
            // random combination of kernel basis columns of V
            for (int t = 0; t < z; ++t) {
                Int w = entry(rng);
                for (int i = 0; i < c1; ++i)
                    d2(i, j) += w * s.V(i, s.rank + t);
            }
        }
        b.d.push_back(d2);
        b.check_composition();
        CHECK(oracle::matches(oracle::homology(b), homology_of_complex(b)));
    }
}

TEST_CASE("composition check throws on a non-complex") {
    GradedBoundaryMatrices b;
    b.dims = {1, 1, 1};
    b.d.push_back(IntMatrix(0, 1));
    b.d.push_back(IntMatrix{{1}});
    b.d.push_back(IntMatrix{{1}});
    CHECK_THROWS_AS(b.check_composition(), Error);
    try {
        b.check_composition();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CompositionNotZero);
    }
}

TEST_CASE("induced maps on homology") {
    // circle with two cells in each degree; the flip map v0<->v1, e_i -> -e_i
    GradedBoundaryMatrices circle;
    circle.dims = {2, 2};
    circle.d.push_back(IntMatrix(0, 2));
    circle.d.push_back(IntMatrix{{1, -1}, {-1, 1}});
    std::vector<IntMatrix> flip = {IntMatrix{{0, 1}, {1, 0}},
                                   IntMatrix{{-1, 0}, {0, -1}}};
    auto ind = induced_map_on_homology(flip, circle, circle);
    REQUIRE(ind.size() == 2);
    CHECK(ind[0].iso);
    CHECK(ind[0].matrix == IntMatrix{{1}});  // H_0: degree preserved
    CHECK(ind[1].iso);
    CHECK(ind[1].matrix == IntMatrix{{-1}}); // H_1: orientation reversed
    // a non-chain-map is rejected with the failing degree
    std::vector<IntMatrix> bad = {IntMatrix{{1, 0}, {0, 0}},
                                  IntMatrix::identity(2)};
    CHECK_THROWS_AS(induced_map_on_homology(bad, circle, circle), Error);
}
