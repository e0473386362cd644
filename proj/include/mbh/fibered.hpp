#pragma once

#include "mbh/chains.hpp"
#include "mbh/cubulation.hpp"

#include <map>
#include <string>
#include <utility>

namespace mbh {

// A trivial combinatorial fiber bundle over one base component.  This models
// a compactified moduli space restricted to a component: the projection to
// the base is the product projection, the fiber carries a fundamental chain,
// and an explicit coefficient records the global orientation choice.
struct TrivialBundlePiece {
    std::string base_component; // id of the base component
    int base_dim = 0;           // b
    Cubulation fiber;           // carries the fiber fundamental chain
    Int orientation_coeff = 1;

    int fiber_degree() const {
        if (!fiber.fundamental || fiber.fundamental->empty())
            return fiber.size() ? fiber.dim() : 0;
        return fiber.cell(fiber.fundamental->begin()->first).dim;
    }
    int total_degree() const { return base_dim + fiber_degree(); }
};

// Degree of a fibered product of chains of degrees p1, p2 over a base of
// dimension b.  Throws NegativeDegree when the formula goes negative.
int fibered_degree(int p1, int p2, int b);

// Symbolic fibered products over a fixed base dimension: pair generators are
// registered so their boundaries can be expanded recursively.
class FiberedUniverse {
public:
    FiberedUniverse(const BoundarySpec& left, const BoundarySpec& right, int base_dim)
        : left_(&left), right_(&right), base_dim_(base_dim) {}

    GeneratorId pair_gen(const GeneratorId& a, const GeneratorId& b);
    // bilinear extension of the pairing
    FormalChain pair_chain(const FormalChain& a, const FormalChain& b);
    // ∂(P1 x P2) = ∂P1 x P2 + (-1)^{p1+b} P1 x ∂P2, extended linearly over a
    // chain of registered pair generators
    FormalChain boundary(const FormalChain& pairs);

private:
    const BoundarySpec* left_;
    const BoundarySpec* right_;
    int base_dim_;
    std::map<GeneratorId, std::pair<GeneratorId, GeneratorId>> decomp_;
};

// Two-term boundary expansion of P1 x_B P2 for homogeneous chains.
FormalChain fibered_boundary(const FormalChain& P1, const FormalChain& P2,
                             const BoundarySpec& s1, const BoundarySpec& s2,
                             int base_dim);

// Concrete pullback of a degree-q generator along a bundle piece: the product
// of the standard q-cube complex with the fiber, fundamental chain scaled by
// the orientation sign (-1)^{b * total_degree} and the piece coefficient.
struct ProductDomain {
    Cubulation total;      // cube_complex(q) x fiber
    CellChain fundamental; // signed chain of top cells
    int degree = 0;        // q + fiber_degree
};

// base_component_of_sigma names the component the generator lives on; a
// mismatch with the piece raises BaseMismatch.
ProductDomain pullback(int q, const std::string& base_component_of_sigma,
                       const TrivialBundlePiece& piece);

// Composite of two stacked bundle pieces as a single piece over the first
// base: fiber is the product of fibers and the coefficient absorbs the
// reassociation sign (-1)^{(b1+b2)*d2 + b1*b2}.  extra_sign is a test hook
// multiplied into the composite coefficient (pass -1 to corrupt it).
TrivialBundlePiece compose_pieces(const TrivialBundlePiece& first,
                                  const TrivialBundlePiece& second,
                                  int extra_sign = 1);

// True iff pulling back a q-generator through (first then second) equals the
// single pullback through the composite piece: identical cell ids, identical
// fundamental chains, identical cellular boundaries.
bool check_associativity(int q, const TrivialBundlePiece& first,
                         const TrivialBundlePiece& second, int corrupt_sign = 1);

} // namespace mbh
