#include "mbh/fibered.hpp"

namespace mbh {

int fibered_degree(int p1, int p2, int b) {
    int d = p1 + p2 - b;
    if (d < 0)
        throw Error(ErrorCode::NegativeDegree,
                    std::to_string(p1) + " + " + std::to_string(p2) + " - " +
                        std::to_string(b));
    return d;
}

GeneratorId FiberedUniverse::pair_gen(const GeneratorId& a, const GeneratorId& b) {
    GeneratorId g{"(" + a.name + "|" + b.name + ")",
                  fibered_degree(a.degree, b.degree, base_dim_),
                  GenKind::FiberedProductComponent};
    decomp_.emplace(g, std::make_pair(a, b));
    return g;
}

FormalChain FiberedUniverse::pair_chain(const FormalChain& a, const FormalChain& b) {
    FormalChain out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) out.add(pair_gen(ga, gb), ca * cb);
    return out;
}

FormalChain FiberedUniverse::boundary(const FormalChain& pairs) {
    FormalChain out;
    for (const auto& [g, coeff] : pairs.terms()) {
        auto it = decomp_.find(g);
        if (it == decomp_.end()) throw Error(ErrorCode::UnknownGenerator, g.name);
        const auto& [a, b] = it->second;
        FormalChain ca, cb;
        ca.add(a, 1);
        cb.add(b, 1);
        FormalChain da = chain_boundary(ca, *left_);
        FormalChain db = chain_boundary(cb, *right_);
        const int sgn = ((a.degree + base_dim_) % 2 == 0) ? 1 : -1;
        out += pair_chain(da, cb) * coeff;
        out += pair_chain(ca, db) * (coeff * sgn);
    }
    return out;
}

FormalChain fibered_boundary(const FormalChain& P1, const FormalChain& P2,
                             const BoundarySpec& s1, const BoundarySpec& s2,
                             int base_dim) {
    FiberedUniverse u(s1, s2, base_dim);
    FormalChain pairs = u.pair_chain(P1, P2);
    return u.boundary(pairs);
}

ProductDomain pullback(int q, const std::string& base_component_of_sigma,
                       const TrivialBundlePiece& piece) {
    if (base_component_of_sigma != piece.base_component)
        throw Error(ErrorCode::BaseMismatch,
                    base_component_of_sigma + " vs " + piece.base_component);
    if (!piece.fiber.fundamental)
        throw Error(ErrorCode::NoFundamentalChain, piece.base_component);
    ProductDomain d;
    d.total = Cubulation::product(cube_complex(q), piece.fiber);
    d.degree = fibered_degree(q, piece.total_degree(), piece.base_dim);
    const int fold =
        ((piece.base_dim * piece.total_degree()) % 2 == 0) ? 1 : -1;
    const Int scale = Int(fold) * piece.orientation_coeff;
    const int top = cube_top_cell(q);
    for (const auto& [t, c] : *piece.fiber.fundamental)
        chain_add(d.fundamental, Cubulation::product_cell(piece.fiber, top, t),
                  c * scale);
    return d;
}

TrivialBundlePiece compose_pieces(const TrivialBundlePiece& first,
                                  const TrivialBundlePiece& second,
                                  int extra_sign) {
    TrivialBundlePiece comp;
    comp.base_component = first.base_component;
    comp.base_dim = first.base_dim;
    comp.fiber = Cubulation::product(first.fiber, second.fiber);
    const int b1 = first.base_dim, b2 = second.base_dim;
    const int d2 = second.total_degree();
    const int relsign = (((b1 + b2) * d2 + b1 * b2) % 2 == 0) ? 1 : -1;
    comp.orientation_coeff = first.orientation_coeff * second.orientation_coeff *
                             Int(relsign) * Int(extra_sign);
    return comp;
}

namespace {

bool same_complex(const Cubulation& A, const Cubulation& B) {
    if (A.size() != B.size()) return false;
    for (int i = 0; i < A.size(); ++i) {
        int j = B.find(A.cell(i).id);
        if (j < 0 || B.cell(j).dim != A.cell(i).dim) return false;
        CellChain da = A.boundary_of_cell(i);
        CellChain db = B.boundary_of_cell(j);
        // compare by id to be independent of insertion order
        std::map<std::string, Int> ma, mb;
        for (const auto& [c, k] : da) ma[A.cell(c).id] = k;
        for (const auto& [c, k] : db) mb[B.cell(c).id] = k;
        if (ma != mb) return false;
    }
    return true;
}

std::map<std::string, Int> by_id(const Cubulation& K, const CellChain& c) {
    std::map<std::string, Int> m;
    for (const auto& [cell, k] : c) m[K.cell(cell).id] = k;
    return m;
}

} // namespace

bool check_associativity(int q, const TrivialBundlePiece& first,
                         const TrivialBundlePiece& second, int corrupt_sign) {
    // Left bracketing: pull back through the first piece, then treat the
    // result's top cells as the base of the second pullback.
    ProductDomain left1 = pullback(q, first.base_component, first);
    // fold in the second stage by hand: product with second fiber, sign
    // (-1)^{b2 * d2}, coefficient c2
    const int b2 = second.base_dim, d2 = second.total_degree();
    const int fold2 = ((b2 * d2) % 2 == 0) ? 1 : -1;
    Cubulation left_total = Cubulation::product(left1.total, second.fiber);
    CellChain left_fund;
    if (!second.fiber.fundamental)
        throw Error(ErrorCode::NoFundamentalChain, second.base_component);
    for (const auto& [a, ca] : left1.fundamental)
        for (const auto& [t, ct] : *second.fiber.fundamental)
            chain_add(left_fund, Cubulation::product_cell(second.fiber, a, t),
                      ca * ct * Int(fold2) * second.orientation_coeff);

    // Right bracketing: one pullback through the composite piece.
    TrivialBundlePiece comp = compose_pieces(first, second, corrupt_sign);
    ProductDomain right = pullback(q, first.base_component, comp);

    if (!same_complex(left_total, right.total)) return false;
    if (by_id(left_total, left_fund) != by_id(right.total, right.fundamental))
        return false;
    return by_id(left_total, left_total.boundary(left_fund)) ==
           by_id(right.total, right.total.boundary(right.fundamental));
}

} // namespace mbh
