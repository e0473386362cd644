#pragma once

#include "mbh/flow_category.hpp"
#include "mbh/homology.hpp"

#include <map>
#include <string>
#include <vector>

namespace mbh {

// One generator of the total complex: a p-cell on a component of level i,
// graded by k = p + i.
struct MorseBottGenerator {
    int level = 0;     // i
    int cell = 0;      // index in the level's combined complex
    int p = 0;         // cell dimension
    std::string id;    // "L{i}:{cell id}", stable across runs

    int k() const { return p + level; }
};

class MorseBottComplex {
public:
    const std::vector<std::vector<MorseBottGenerator>>& generators() const {
        return gens_;
    }
    const GradedBoundaryMatrices& boundary() const { return boundary_; }
    // Matrix of the level-drop-j part of the boundary in degree k (zero
    // matrix when there is no such block).
    IntMatrix block(int k, int j) const;
    int top() const { return int(gens_.size()) - 1; }
    bool truncated() const { return truncated_; }

    // Position of the generator for (level, combined cell) within its degree;
    // -1 when outside the enumerated range.
    int position(int level, int cell) const;

    friend MorseBottComplex assemble(const FlowCategory& fc, int k_max);

private:
    std::vector<std::vector<MorseBottGenerator>> gens_;
    std::map<std::pair<int, int>, std::pair<int, int>> index_; // (level,cell) -> (k,pos)
    GradedBoundaryMatrices boundary_;
    std::map<std::pair<int, int>, IntMatrix> blocks_; // (k, j) -> matrix
    bool truncated_ = false;
};

// Chain-level boundary components of a single generator, as chains on the
// combined complex of the target level.
// ∂_0 = (-1)^{p+i} times the cellular boundary, on the same level.
CellChain partial0(const FlowCategory& fc, const MorseBottGenerator& g);
// ∂_j (j >= 1): pull the generator back along the (i, i-j) moduli data,
// orient, and push through the endpoint map.  Missing data gives zero.
CellChain partialj(const FlowCategory& fc, const MorseBottGenerator& g, int j);

// Enumerates generators up to degree k_max (pass -1 for the full complex),
// fills all boundary blocks, and verifies Σ_q ∂_q ∂_{j-q} = 0 blockwise.
// Throws DSquaredViolation naming the failing (k, j).
MorseBottComplex assemble(const FlowCategory& fc, int k_max = -1);

HomologyGroups morse_bott_homology(const FlowCategory& fc, int k_max = -1);

// Smallest degree cutoff whose truncation leaves H_k exact.
int truncation_bound(const FlowCategory& fc, int k);

// Degree of the full complex (largest occupied Morse-Bott degree).
int full_degree(const FlowCategory& fc);

} // namespace mbh
