#pragma once

#include "mbh/errors.hpp"
#include "mbh/int_matrix.hpp"
#include "mbh/smith.hpp"

#include <vector>

namespace mbh {

// A finitely generated free chain complex concentrated in degrees 0..top().
// d[k] is the matrix of the boundary C_k -> C_{k-1} in the chosen generator
// bases; d[0] has zero rows.
struct GradedBoundaryMatrices {
    std::vector<int> dims;    // dims[k] = rank of C_k
    std::vector<IntMatrix> d; // d[k] : dims[k-1] x dims[k] (d[0]: 0 x dims[0])

    int top() const { return int(dims.size()) - 1; }
    int dim_at(int k) const {
        return (k >= 0 && k < int(dims.size())) ? dims[k] : 0;
    }
    // Boundary matrix C_k -> C_{k-1}, a zero matrix of the right shape when k
    // is outside the stored range.
    IntMatrix d_at(int k) const {
        if (k >= 0 && k < int(d.size())) return d[k];
        return IntMatrix(dim_at(k - 1), dim_at(k));
    }
    // Throws CompositionNotZero on the first degree where d[k-1] * d[k] != 0.
    void check_composition() const;
};

struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion; // each >= 2, divisibility chain
};

struct HomologyGroups {
    std::vector<HomologyGroup> groups; // per degree, 0..top
    std::string to_string() const;
};

HomologyGroups homology_of_complex(const GradedBoundaryMatrices& b);

// Internal presentation of H_k used for induced maps: kernel basis of d[k]
// plus the SNF of the relation matrix expressing im d[k+1] in that basis.
struct HomologyPresentation {
    int z = 0;                // dim ker d[k]
    int rank_dk = 0;          // rank of d[k]
    IntMatrix Z;              // dims[k] x z, kernel basis columns
    IntMatrix Vinv;           // V^{-1} from SNF of d[k]
    SmithResult snfX;         // SNF of the z x dims[k+1] relation matrix
    std::vector<Int> invariants; // per presentation coordinate: 0 free, 1 killed, d>=2 torsion
    std::vector<int> live;       // coordinates with invariant != 1

    // Coordinates of a cycle in the presentation basis, restricted to live
    // coordinates, torsion coordinates reduced into [0, d).
    std::vector<Int> class_of(const std::vector<Int>& cycle) const;
    // A cycle representing the j-th live generator.
    std::vector<Int> generator(int live_index) const;
};

HomologyPresentation present_homology(const GradedBoundaryMatrices& b, int k);

struct InducedMapDegree {
    IntMatrix matrix; // target live coords x source live coords
    bool iso = false;
    std::vector<Int> source_invariants; // live invariants (0 = free factor)
    std::vector<Int> target_invariants;
};

// f[k] maps C_k(source) -> C_k(target); missing degrees are treated as zero.
// Throws NotAChainMap(k) if f fails to commute with the boundaries.
std::vector<InducedMapDegree>
induced_map_on_homology(const std::vector<IntMatrix>& f,
                        const GradedBoundaryMatrices& source,
                        const GradedBoundaryMatrices& target);

} // namespace mbh
