#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbh/io.hpp"
#include "mbh/mb_complex.hpp"
#include "oracle.hpp"

using namespace mbh;

namespace {

std::string fixture(const std::string& name) {
    return std::string(MBH_FIXTURES) + "/" + name + ".json";
}

FlowCategory load(const std::string& name) {
    return load_flow_category(fixture(name));
}

std::vector<std::string> ids(const MorseBottComplex& mc, int k) {
    std::vector<std::string> out;
    for (const auto& g : mc.generators()[size_t(k)]) out.push_back(g.id);
    return out;
}

} // namespace

TEST_CASE("generators are graded by cell dimension plus level") {
    FlowCategory fc = load("sphere-z2");
    MorseBottComplex mc = assemble(fc);
    CHECK(mc.top() == 2);
    CHECK(!mc.truncated());
    CHECK(ids(mc, 0) == std::vector<std::string>{"L0:v0", "L0:v1"});
    CHECK(ids(mc, 1) == std::vector<std::string>{"L0:e0", "L0:e1"});
    CHECK(ids(mc, 2) == std::vector<std::string>{"L2:n", "L2:s"});
    CHECK(full_degree(fc) == 2);
    const CriticalLevel* l2 = fc.level(2);
    CHECK(mc.position(2, l2->combined.find("n")) == 0);
    CHECK(mc.position(2, l2->combined.find("s")) == 1);
    CHECK(mc.position(5, 0) == -1);
}

TEST_CASE("cellular part of the boundary carries the degree sign") {
    FlowCategory fc = load("sphere-z2");
    const CriticalLevel* l0 = fc.level(0);
    MorseBottGenerator e0{0, l0->combined.find("e0"), 1, "L0:e0"};
    // degree 1 is odd: the cellular boundary v0 - v1 enters negated
    CellChain d = partial0(fc, e0);
    CHECK(d.at(l0->combined.find("v0")) == -1);
    CHECK(d.at(l0->combined.find("v1")) == 1);
    // even degree: no sign
    FlowCategory tc = load("torus-constant");
    const CriticalLevel* lv = tc.level(0);
    MorseBottGenerator sq{0, lv->combined.find("e0*f0"), 2, "L0:e0*f0"};
    CHECK(partial0(tc, sq) == lv->combined.boundary_of_cell(sq.cell));
}

TEST_CASE("moduli part of the boundary pushes the oriented fiber forward") {
    FlowCategory fc = load("sphere-z2");
    const CriticalLevel* l0 = fc.level(0);
    const CriticalLevel* l2 = fc.level(2);
    MorseBottGenerator n{2, l2->combined.find("n"), 0, "L2:n"};
    MorseBottGenerator s{2, l2->combined.find("s"), 0, "L2:s"};
    CellChain dn = partialj(fc, n, 2);
    CHECK(dn.at(l0->combined.find("e0")) == 1);
    CHECK(dn.at(l0->combined.find("e1")) == 1);
    CellChain ds = partialj(fc, s, 2);
    CHECK(ds.at(l0->combined.find("e0")) == -1);
    CHECK(ds.at(l0->combined.find("e1")) == -1);
    // no bundle for this level drop
    CHECK(partialj(fc, n, 1).empty());
}

TEST_CASE("the negated square sphere realizes n - s at chain level") {
    FlowCategory fc = load("sphere-neg-z2");
    const CriticalLevel* l0 = fc.level(0);
    const CriticalLevel* l1 = fc.level(1);
    for (const char* w : {"w0", "w1"}) {
        MorseBottGenerator g{1, l1->combined.find(w), 0, std::string("L1:") + w};
        CellChain d = partialj(fc, g, 1);
        CHECK(d.at(l0->combined.find("n")) == 1);
        CHECK(d.at(l0->combined.find("s")) == -1);
    }
    CHECK(morse_bott_homology(fc).to_string() == "H_0=Z H_1=0 H_2=Z");
}

TEST_CASE("assembled boundaries square to zero blockwise on all fixtures") {
    for (const char* name :
         {"sphere-z2", "sphere-neg-z2", "sphere-morse", "torus-constant",
          "torus-morse-smale", "three-level", "twoflow", "onepoint"}) {
        FlowCategory fc = load(name);
        MorseBottComplex mc = assemble(fc); // throws DSquaredViolation on failure
        mc.boundary().check_composition();
        for (int k = 2; k <= mc.top(); ++k)
            for (int j = 0; j <= 2 * fc.m; ++j) {
                IntMatrix sum(int(mc.generators()[size_t(k - 2)].size()),
                              int(mc.generators()[size_t(k)].size()));
                for (int q = 0; q <= j; ++q)
                    sum = sum + mc.block(k - 1, q) * mc.block(k, j - q);
                CHECK(sum.is_zero());
            }
        // the blocks add up to the assembled boundary
        for (int k = 1; k <= mc.top(); ++k) {
            IntMatrix total(int(mc.generators()[size_t(k - 1)].size()),
                            int(mc.generators()[size_t(k)].size()));
            for (int j = 0; j <= fc.m; ++j) total = total + mc.block(k, j);
            CHECK(total == mc.boundary().d[size_t(k)]);
        }
    }
}

TEST_CASE("constant specialization reproduces the cubical complex") {
    FlowCategory fc = load("torus-constant");
    MorseBottComplex mc = assemble(fc);
    const Cubulation& K = fc.level(0)->combined;
    GradedBoundaryMatrices cellular = K.boundary_matrices();
    REQUIRE(mc.top() == cellular.top());
    for (int k = 0; k <= mc.top(); ++k) {
        // generator for generator, in the cellular enumeration order
        const auto& cells = K.cells_of_dim(k);
        REQUIRE(int(mc.generators()[size_t(k)].size()) == int(cells.size()));
        for (size_t i = 0; i < cells.size(); ++i)
            CHECK(mc.generators()[size_t(k)][i].id == "L0:" + K.cell(cells[i]).id);
        // boundary agrees up to the degree sign (-1)^k
        IntMatrix expect = cellular.d_at(k);
        if (k % 2 == 1) {
            for (int r = 0; r < expect.rows(); ++r)
                for (int c = 0; c < expect.cols(); ++c)
                    expect(r, c) = -expect(r, c);
        }
        CHECK(mc.boundary().d_at(k) == expect);
        CHECK(mc.block(k, 1).is_zero());
    }
    HomologyGroups h = morse_bott_homology(fc);
    CHECK(h.to_string() == "H_0=Z H_1=Z^2 H_2=Z");
    CHECK(oracle::matches(oracle::homology(cellular), h));
}

TEST_CASE("morse-smale specialization is the critical-point complex") {
    FlowCategory fc = load("torus-morse-smale");
    MorseBottComplex mc = assemble(fc);
    CHECK(mc.boundary().dims == std::vector<int>{1, 2, 1});
    // only the one-level drop can be nonzero, and here it vanishes too
    for (int k = 1; k <= 2; ++k) {
        CHECK(mc.block(k, 0).is_zero());
        CHECK(mc.block(k, 2).is_zero());
        CHECK(mc.boundary().d_at(k).is_zero());
    }
    HomologyGroups h = morse_bott_homology(fc);
    CHECK(h.to_string() == "H_0=Z H_1=Z^2 H_2=Z");
    CHECK(oracle::matches(oracle::homology(mc.boundary()), h));
}

TEST_CASE("three-level boundaries vanish and homology stacks up") {
    FlowCategory fc = load("three-level");
    MorseBottComplex mc = assemble(fc);
    CHECK(mc.boundary().dims == std::vector<int>{1, 1, 1});
    CHECK(morse_bott_homology(fc).to_string() == "H_0=Z H_1=Z H_2=Z");
}

TEST_CASE("degree truncation") {
    FlowCategory fc = load("sphere-z2");
    MorseBottComplex mc = assemble(fc, 1);
    CHECK(mc.truncated());
    CHECK(mc.top() == 1);
    HomologyGroups full = morse_bott_homology(fc);
    HomologyGroups cut = morse_bott_homology(fc, 1);
    // degrees strictly below the cutoff are unaffected
    CHECK(cut.groups[0].betti == full.groups[0].betti);
    CHECK(truncation_bound(fc, 0) == 1);
    CHECK(truncation_bound(FlowCategory{}, 3) == 0);
    // k_max beyond the full degree is not a truncation
    CHECK(!assemble(fc, 10).truncated());
    CHECK(assemble(fc, -1).top() == 2);
}

TEST_CASE("an inconsistent category is rejected at assembly") {
    FlowCategory fc = load("three-level");
    // twist both endpoint maps so the composite through level 1 no longer
    // cancels: b*tm now lands on -a and c*um on -b
    fc.moduli[0].pieces[0].endpoint_images["b*tm"] = {{Int(-1), "a"}};
    fc.moduli[1].pieces[0].endpoint_images["c*um"] = {{Int(-1), "b"}};
    fc.finalize(); // the twisted maps are still chain maps, so this passes
    CHECK_THROWS_AS(assemble(fc), Error);
    try {
        assemble(fc);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DSquaredViolation);
    }
}

TEST_CASE("empty category") {
    FlowCategory fc;
    CHECK(fc.empty());
    CHECK(full_degree(fc) == -1);
    MorseBottComplex mc = assemble(fc);
    CHECK(mc.boundary().dims.empty());
}
