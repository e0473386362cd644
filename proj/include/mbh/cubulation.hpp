#pragma once

#include "mbh/chains.hpp"
#include "mbh/cube.hpp"
#include "mbh/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mbh {

// Integer chain on the cells of a fixed cubulation: cell index -> coefficient.
using CellChain = std::map<int, Int>;

void chain_add(CellChain& c, int cell, const Int& coeff);
CellChain chain_scale(const CellChain& c, const Int& k);
CellChain chain_sum(const CellChain& a, const CellChain& b);

struct CellBoundaryEntry {
    int sign;   // ±1
    int axis;   // which cube axis the face lives on
    int side;   // 0 or 1
    int target; // cell index of the face
};

struct CubeCell {
    std::string id;
    int dim = 0;
    std::vector<CellBoundaryEntry> boundary; // 2*dim entries for a dim-cell
};

// A finite complex of abstract cubes with explicit signed incidence.  One
// instance models a single connected piece (critical component, moduli fiber,
// product total space); disjoint unions are kept as separate instances.
class Cubulation {
public:
    int add_cell(const std::string& id, int dim,
                 std::vector<CellBoundaryEntry> boundary = {});
    void add_boundary(int cell, int sign, int axis, int side,
                      const std::string& target_id);

    int size() const { return int(cells_.size()); }
    const CubeCell& cell(int i) const { return cells_[size_t(i)]; }
    int find(const std::string& id) const; // -1 when absent
    int dim() const;                       // max cell dimension, -1 if empty

    CellChain boundary_of_cell(int i) const;
    CellChain boundary(const CellChain& c) const;

    // Designated cycle of top cells, when the complex models a closed
    // oriented manifold.
    std::optional<CellChain> fundamental;

    // Structural checks: face dimensions, ∂² = 0, fundamental chain of pure
    // dimension.  Closed components require the fundamental chain to be a
    // cycle; moduli fibers (manifolds with boundary) pass require_cycle =
    // false.
    ValidationReport validate(bool require_cycle = true) const;

    // Cells of each degree in insertion order; position of a cell within its
    // degree.  These fix the generator bases of all derived matrices.
    const std::vector<int>& cells_of_dim(int p) const;
    int position_in_dim(int cell) const;

    GradedBoundaryMatrices boundary_matrices() const;

    // Product complex; cell ids are "a*b", axes of the second factor are
    // shifted past the first, and ∂(a×b) = ∂a×b + (-1)^{dim a} a×∂b.
    // The fundamental chain is the product of fundamentals when both exist.
    static Cubulation product(const Cubulation& A, const Cubulation& B);
    // Index of cell (a,b) in the product built from A and B; the layout is
    // a * |B| + b, so only the second factor is needed.
    static int product_cell(const Cubulation& B, int a, int b) {
        return a * B.size() + b;
    }

    std::string chain_to_string(const CellChain& c) const;

private:
    std::vector<CubeCell> cells_;
    std::map<std::string, int> index_;
    mutable std::vector<std::vector<int>> by_dim_;
    mutable std::vector<int> pos_;
    mutable bool dirty_ = true;
    void refresh() const;
};

// Per-cell images in the target; validated to commute with the cellular
// boundaries on construction (throws NotChainLevel naming the first failing
// cell).  The zero chain is an allowed image: that is how maps that collapse
// a cell below its dimension are recorded.
class CellularChainMap {
public:
    CellularChainMap(const Cubulation& source, const Cubulation& target,
                     std::vector<CellChain> image);

    const Cubulation& source() const { return *source_; }
    const Cubulation& target() const { return *target_; }
    const CellChain& image_of(int cell) const { return image_[size_t(cell)]; }
    CellChain apply(const CellChain& c) const;

private:
    const Cubulation* source_;
    const Cubulation* target_;
    std::vector<CellChain> image_;
};

HomologyGroups cubical_homology(const Cubulation& K);

// The complex of all faces of I^p (3^p cells), with the alternating-sign
// incidence of face_boundary.  Cell ids are face names like "*1".
const Cubulation& cube_complex(int p);
// Cell index of a face name within cube_complex(p).
int cube_cell(int p, const std::string& face_name);
// Index of the unique top cell of cube_complex(p).
int cube_top_cell(int p);

// A singular p-cube with cellular image data: a chain map from cube_complex(p)
// into the target, remembered together with the face of I^N it was originally
// presented on (free axes identified in ambient order).
struct SingularCube {
    CubeFace presented_on;  // face of some I^N with degree() == p
    CellularChainMap map;   // from cube_complex(p) to the target

    int p() const { return presented_on.degree(); }
    // True when the image data does not depend on the given axis of the
    // standard cube: faces free in that axis map to zero and the two pinned
    // copies of each face have equal images.
    bool independent_of_axis(int axis) const;
    bool is_degenerate() const;
    // Serialization of the image data alone; two singular cubes presented on
    // different faces but carrying the same image data share a key.
    std::string canonical_key() const;
};

// Chain of singular cubes, normalized: degenerate terms dropped, terms with
// equal canonical keys merged.  Terms must share one target and degree.
std::vector<std::pair<Int, SingularCube>>
normalize(const std::vector<std::pair<Int, SingularCube>>& terms);

// The underlying cell chain of a normalized chain: sum of coefficients times
// the image of the top cell.
CellChain chain_value(const std::vector<std::pair<Int, SingularCube>>& terms);

} // namespace mbh
