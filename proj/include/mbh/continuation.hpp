#pragma once

#include "mbh/mb_complex.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mbh {

// Degree-shifting cellular data attached to a continuation bundle: an
// explicit image chain on the target level for each cell of a source base
// component.  This is how index-raising flow data (source level below target
// level) is represented; bundle pieces only cover the index-preserving and
// index-lowering part.
struct TransferAssignment {
    std::string base_component;
    std::map<std::string, std::vector<std::pair<Int, std::string>>> images;
};

struct ContinuationBundle {
    int from = 0; // source level i
    int to = 0;   // target level j
    std::vector<ModuliPiece> pieces; // fiber degree i - j, total b_i + i - j
    std::vector<TransferAssignment> transfers;
};

struct ContinuationData {
    std::string name;
    std::string source_name, target_name;
    const FlowCategory* source = nullptr;
    const FlowCategory* target = nullptr;
    std::vector<ContinuationBundle> bundles;
    // extra degree shift of every bundle: 0 for continuations, +1 for the
    // homotopy bundles of a square of continuations
    int degree_shift = 0;

    // Resolves components, builds totals and endpoint maps against the target
    // category.
    void finalize();
    ValidationReport validate() const;
};

// Verifies the stratified boundary of every continuation piece: each fiber
// boundary cell carries exactly one left-family or right-family label whose
// signed product of factor coefficients reproduces the cellular coefficient,
// with the right-family sign negated.
ValidationReport continuation_boundary_validate(const ContinuationData& cd);

// The chain map induced by the continuation data, as one matrix per
// Morse-Bott degree from the source complex basis to the target complex
// basis (shifted up by degree_shift for homotopy data).
std::vector<IntMatrix> chain_map_from_continuation(const ContinuationData& cd,
                                                   const MorseBottComplex& src,
                                                   const MorseBottComplex& tgt);

bool verify_chain_map(const std::vector<IntMatrix>& F,
                      const GradedBoundaryMatrices& source,
                      const GradedBoundaryMatrices& target);

struct HomotopyData {
    const FlowCategory* f1 = nullptr;
    const FlowCategory* f2 = nullptr;
    const FlowCategory* f3 = nullptr;
    const FlowCategory* f4 = nullptr;
    const ContinuationData* F21 = nullptr; // f1 -> f2
    const ContinuationData* F31 = nullptr; // f1 -> f3
    const ContinuationData* F42 = nullptr; // f2 -> f4
    const ContinuationData* F43 = nullptr; // f3 -> f4
    ContinuationData H; // f1 -> f4 with degree_shift = 1
};

// Exact matrix identity F43∘F31 - F42∘F21 = ∂H + H∂ per degree.
bool verify_chain_homotopy(const HomotopyData& hd);

// Identity continuation: one point-fiber diagonal piece per component, with
// coefficient (-1)^{b} so the induced chain map is literally the identity.
ContinuationData make_identity_continuation(const FlowCategory& fc);

// Representing chains for the pullback domains of one bundle piece applied to
// a degree-q generator: the signed top-cell chain of the product, plus the
// chains of its codimension-one subdomains (faces of the cube, and the fiber
// boundary strata with the (-1)^{b} fold ratio).  Returns false if the
// cellular boundary of the top chain fails to match the fibered-product
// boundary expansion realized through those chains.
struct RepresentingChainSystem {
    std::map<std::string, CellChain> chains; // keyed by domain name
    bool boundary_compatible = false;
};
RepresentingChainSystem build_representing_chains(int q,
                                                  const TrivialBundlePiece& piece);

// F' = F + ∂∘w + w∘∂ for a degree +1 map w; chain-homotopic perturbations are
// how a change of representing chain system shows up at matrix level.
std::vector<IntMatrix> perturb_chain_map(const std::vector<IntMatrix>& F,
                                         const std::vector<IntMatrix>& w,
                                         const GradedBoundaryMatrices& source,
                                         const GradedBoundaryMatrices& target);

struct IndependenceReport {
    std::vector<InducedMapDegree> forward;  // induced by A -> B
    std::vector<InducedMapDegree> backward; // induced by B -> A
    bool composites_identity = false;
    bool all_isos = true;
};

// Checks that the two continuations induce mutually inverse isomorphisms on
// homology.
IndependenceReport independence_check(const FlowCategory& A, const FlowCategory& B,
                                      const ContinuationData& AB,
                                      const ContinuationData& BA);

} // namespace mbh
