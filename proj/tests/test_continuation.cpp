#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbh/continuation.hpp"
#include "mbh/io.hpp"
#include "helpers.hpp"

using namespace mbh;

namespace {

std::string fixture(const std::string& name) {
    return std::string(MBH_FIXTURES) + "/" + name + ".json";
}

FlowCategory load(const std::string& name) {
    return load_flow_category(fixture(name));
}

bool is_identity(const std::vector<IntMatrix>& F) {
    for (const auto& m : F)
        if (m != IntMatrix::identity(m.cols())) return false;
    return true;
}

} // namespace

TEST_CASE("identity continuations are literally the identity") {
    for (const char* name :
         {"sphere-z2", "sphere-neg-z2", "sphere-morse", "torus-constant",
          "torus-morse-smale", "three-level", "twoflow", "onepoint"}) {
        FlowCategory fc = load(name);
        MorseBottComplex mc = assemble(fc);

        ContinuationData synth = make_identity_continuation(fc);
        CHECK(synth.validate().ok());
        CHECK(continuation_boundary_validate(synth).ok());
        std::vector<IntMatrix> F = chain_map_from_continuation(synth, mc, mc);
        CHECK(is_identity(F));
        CHECK(verify_chain_map(F, mc.boundary(), mc.boundary()));

        // the serialized fixture produces the same matrices
        ContinuationData loaded =
            load_continuation(fixture(std::string("identity-") + name), fc, fc);
        std::vector<IntMatrix> G = chain_map_from_continuation(loaded, mc, mc);
        CHECK(is_identity(G));
    }
}

TEST_CASE("continuation endpoints must name the given categories") {
    FlowCategory a = load("sphere-z2");
    FlowCategory b = load("sphere-neg-z2");
    CHECK_THROWS_AS(load_continuation(fixture("identity-sphere-z2"), a, b), Error);
    try {
        load_continuation(fixture("identity-sphere-z2"), a, b);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaError);
    }
}

TEST_CASE("the two sphere models are continuation equivalent") {
    FlowCategory a = load("sphere-z2");
    FlowCategory b = load("sphere-neg-z2");
    ContinuationData F = load_continuation(fixture("cont-sphere-z2-to-neg"), a, b);
    ContinuationData G = load_continuation(fixture("cont-neg-to-sphere-z2"), b, a);
    CHECK(continuation_boundary_validate(F).ok());
    CHECK(continuation_boundary_validate(G).ok());

    MorseBottComplex ca = assemble(a), cb = assemble(b);
    std::vector<IntMatrix> Fm = chain_map_from_continuation(F, ca, cb);
    std::vector<IntMatrix> Gm = chain_map_from_continuation(G, cb, ca);
    CHECK(verify_chain_map(Fm, ca.boundary(), cb.boundary()));
    CHECK(verify_chain_map(Gm, cb.boundary(), ca.boundary()));

    // chain-level spot checks: F collapses the minimum circle, G transfers
    // the top class through the explicit degree-shifting assignment
    // F(n) = g0 + g1, F(s) = 0 (columns n, s of degree 2)
    CHECK(Fm[2] == IntMatrix{{1, 0}, {1, 0}});
    // G(g0) = n + s, G(g1) = 0
    CHECK(Gm[2] == IntMatrix{{1, 0}, {1, 0}});

    IndependenceReport rep = independence_check(a, b, F, G);
    CHECK(rep.all_isos);
    CHECK(rep.composites_identity);
    REQUIRE(rep.forward.size() == 3);
    for (int k : {0, 2}) {
        CHECK(rep.forward[size_t(k)].iso);
        CHECK(rep.forward[size_t(k)].matrix.rows() == 1);
        CHECK(rep.backward[size_t(k)].iso);
    }
    CHECK(rep.forward[1].matrix.rows() == 0); // H_1 = 0 on both sides
}

TEST_CASE("stratified boundary validation of continuation data") {
    FlowCategory src = load("twoflow");
    FlowCategory tgt = load("onepoint");
    ContinuationData good =
        load_continuation(fixture("cont-twoflow-to-point"), src, tgt);
    CHECK(continuation_boundary_validate(good).ok());

    ContinuationData bad =
        load_continuation(fixture("cont-twoflow-to-point-bad"), src, tgt);
    ValidationReport rep = continuation_boundary_validate(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.to_string().find("does not match the signed stratum product") !=
          std::string::npos);

    // dropping a label is caught
    ContinuationData missing = good;
    missing.bundles[1].pieces[0].strata.pop_back();
    CHECK(!continuation_boundary_validate(missing).ok());

    // labels must point at genuine fiber boundary cells
    ContinuationData stray = good;
    stray.bundles[1].pieces[0].strata[0].fiber_boundary_cell = "E";
    CHECK(!continuation_boundary_validate(stray).ok());

    // family tokens other than left/right never parse
    CHECK_THROWS_AS(
        parse_continuation(R"({"name":"x","source":"twoflow","target":"onepoint",
          "bundles":[{"from":1,"to":0,"pieces":[{"base_component":"b",
          "fiber":{"cells":[{"id":"p","dim":0}],"fundamental":[[1,"p"]]},
          "endpoint_map":[{"cell_id":"b*p","image":[[1,"z"]]}],
          "strata":[{"fiber_boundary_cell":"p","via_index":0,"family":"middle",
                     "left_cell":"x","right_cell":"y"}]}]}]})",
        src, tgt),
        Error);
}

TEST_CASE("index-raising data must use transfers") {
    FlowCategory b = load("sphere-neg-z2");
    FlowCategory a = load("sphere-z2");
    ContinuationData cd = load_continuation(fixture("cont-neg-to-sphere-z2"), b, a);
    // moving the transfer content into a piece is rejected by validate
    ContinuationData raised = cd;
    ModuliPiece p;
    p.bundle.base_component = "circle";
    p.bundle.fiber.add_cell("x", 0);
    raised.bundles[2].pieces.push_back(p);
    CHECK(!raised.validate().ok());

    // transfers obey the degree bound b + i + shift >= j
    ContinuationData toolow = cd;
    toolow.bundles[2].to = 3; // dim 1 + level 1 < 3
    CHECK(!toolow.validate().ok());
}

TEST_CASE("wrong fiber degrees are reported") {
    FlowCategory src = load("twoflow");
    FlowCategory tgt = load("onepoint");
    ContinuationData cd = load_continuation(fixture("cont-twoflow-to-point"), src, tgt);
    // swap the interval fiber for a point: degree 0 instead of 1
    cd.bundles[1].pieces[0].bundle.fiber = helpers::point();
    ValidationReport rep = cd.validate();
    REQUIRE(!rep.ok());
    CHECK(rep.to_string().find("fiber degree") != std::string::npos);
}

TEST_CASE("the homotopy square verifies, its corrupted twin does not") {
    auto good = load_homotopy(fixture("homotopy-square"));
    CHECK(good->data.H.degree_shift == 1);
    CHECK(verify_chain_homotopy(good->data));

    auto bad = load_homotopy(fixture("homotopy-square-bad"));
    CHECK(!verify_chain_homotopy(bad->data));
}

TEST_CASE("the homotopy bundle shifts degree by one") {
    auto lh = load_homotopy(fixture("homotopy-square"));
    MorseBottComplex c1 = assemble(*lh->f1), c4 = assemble(*lh->f4);
    std::vector<IntMatrix> H = chain_map_from_continuation(lh->data.H, c1, c4);
    REQUIRE(H.size() == 3);
    // H(v_i) = e0 + e1, H(e_i) = 0, H(level-2 points) = 0
    CHECK(H[0] == IntMatrix{{1, 1}, {1, 1}});
    CHECK(H[1].is_zero());
    CHECK(H[2].rows() == 0);
}

TEST_CASE("representing chain systems are boundary compatible") {
    // circle fiber over the point base of the sphere model
    FlowCategory fc = load("sphere-z2");
    for (int q = 0; q <= 2; ++q) {
        RepresentingChainSystem sys =
            build_representing_chains(q, fc.moduli[0].pieces[0].bundle);
        CHECK(sys.boundary_compatible);
        CHECK(sys.chains.count("top") == 1);
        CHECK(int(sys.chains.size()) == 1 + 2 * q); // circle fiber: no strata
    }
    // interval fiber with genuine boundary strata
    FlowCategory src = load("twoflow");
    FlowCategory tgt = load("onepoint");
    ContinuationData cd = load_continuation(fixture("cont-twoflow-to-point"), src, tgt);
    for (int q = 0; q <= 2; ++q) {
        RepresentingChainSystem sys =
            build_representing_chains(q, cd.bundles[1].pieces[0].bundle);
        CHECK(sys.boundary_compatible);
        CHECK(sys.chains.count("stratum:w0") == 1);
        CHECK(sys.chains.count("stratum:w1") == 1);
    }
    TrivialBundlePiece nofund;
    nofund.fiber.add_cell("x", 0);
    CHECK_THROWS_AS(build_representing_chains(1, nofund), Error);
}

TEST_CASE("boundary perturbations do not move the induced map") {
    FlowCategory fc = load("sphere-z2");
    MorseBottComplex mc = assemble(fc);
    ContinuationData id = make_identity_continuation(fc);
    std::vector<IntMatrix> F = chain_map_from_continuation(id, mc, mc);

    // w : C_0 -> C_1 sending v0 to e0, everything else along zero
    std::vector<IntMatrix> w(3);
    w[0] = IntMatrix(2, 2);
    w[0](0, 0) = 1;
    w[1] = IntMatrix(2, 2);
    w[2] = IntMatrix(0, 2);
    std::vector<IntMatrix> Fp = perturb_chain_map(F, w, mc.boundary(), mc.boundary());
    CHECK(Fp != F); // genuinely different at chain level
    CHECK(verify_chain_map(Fp, mc.boundary(), mc.boundary()));
    auto before = induced_map_on_homology(F, mc.boundary(), mc.boundary());
    auto after = induced_map_on_homology(Fp, mc.boundary(), mc.boundary());
    REQUIRE(before.size() == after.size());
    for (size_t k = 0; k < before.size(); ++k) {
        CHECK(before[k].matrix == after[k].matrix);
        CHECK(after[k].iso);
    }
}
