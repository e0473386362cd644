#include "mbh/mb_complex.hpp"

namespace mbh {

CellChain partial0(const FlowCategory& fc, const MorseBottGenerator& g) {
    const CriticalLevel* lv = fc.level(g.level);
    CellChain d = lv->combined.boundary_of_cell(g.cell);
    const int sgn = (g.k() % 2 == 0) ? 1 : -1;
    return chain_scale(d, sgn);
}

CellChain partialj(const FlowCategory& fc, const MorseBottGenerator& g, int j) {
    CellChain out;
    const ModuliBundle* b = fc.bundle(g.level, g.level - j);
    if (!b) return out;
    const CriticalLevel* lv = fc.level(g.level);
    const int comp = lv->component_of[size_t(g.cell)];
    const std::string& comp_id = lv->components[size_t(comp)].id;
    for (const auto& piece : b->pieces) {
        if (piece.bundle.base_component != comp_id) continue;
        if (!piece.bundle.fiber.fundamental)
            throw Error(ErrorCode::NoFundamentalChain, comp_id);
        // orientation sign of the pullback, folded into the coefficient
        const int fold =
            ((piece.bundle.base_dim * piece.bundle.total_degree()) % 2 == 0) ? 1 : -1;
        const Int scale = Int(fold) * piece.bundle.orientation_coeff;
        // cell index within the component complex (ids agree with combined)
        const Cubulation& base = lv->components[size_t(comp)].complex;
        int base_cell = base.find(lv->combined.cell(g.cell).id);
        CellChain lift;
        for (const auto& [t, c] : *piece.bundle.fiber.fundamental)
            chain_add(lift, Cubulation::product_cell(piece.bundle.fiber, base_cell, t),
                      c * scale);
        CellChain pushed = piece.endpoint->apply(lift);
        for (const auto& [cell, coeff] : pushed) chain_add(out, cell, coeff);
    }
    return out;
}

IntMatrix MorseBottComplex::block(int k, int j) const {
    auto it = blocks_.find({k, j});
    if (it != blocks_.end()) return it->second;
    int rows = (k >= 1 && k - 1 <= top()) ? int(gens_[size_t(k - 1)].size()) : 0;
    int cols = (k >= 0 && k <= top()) ? int(gens_[size_t(k)].size()) : 0;
    return IntMatrix(rows, cols);
}

int MorseBottComplex::position(int level, int cell) const {
    auto it = index_.find({level, cell});
    return it == index_.end() ? -1 : it->second.second;
}

int full_degree(const FlowCategory& fc) {
    int top = -1;
    for (const auto& [i, lv] : fc.levels) {
        int d = lv.combined.dim();
        if (d < 0 && lv.combined.size() == 0) continue;
        top = std::max(top, i + std::max(d, 0));
    }
    return top;
}

MorseBottComplex assemble(const FlowCategory& fc, int k_max) {
    MorseBottComplex mc;
    const int full = full_degree(fc);
    int K = (k_max < 0) ? full : std::min(k_max, full);
    mc.truncated_ = K < full;
    if (K < 0) {
        mc.boundary_ = GradedBoundaryMatrices{};
        return mc;
    }

    mc.gens_.assign(size_t(K) + 1, {});
    for (int k = 0; k <= K; ++k)
        for (const auto& [i, lv] : fc.levels) {
            if (i > k) continue;
            const int p = k - i;
            for (int cell : lv.combined.cells_of_dim(p)) {
                MorseBottGenerator g{i, cell, p,
                                     "L" + std::to_string(i) + ":" +
                                         lv.combined.cell(cell).id};
                mc.index_[{i, cell}] = {k, int(mc.gens_[size_t(k)].size())};
                mc.gens_[size_t(k)].push_back(g);
            }
        }

    mc.boundary_.dims.clear();
    for (int k = 0; k <= K; ++k)
        mc.boundary_.dims.push_back(int(mc.gens_[size_t(k)].size()));

    const int m = fc.m;
    for (int k = 0; k <= K; ++k) {
        const int rows = (k == 0) ? 0 : int(mc.gens_[size_t(k - 1)].size());
        IntMatrix total(rows, int(mc.gens_[size_t(k)].size()));
        for (int j = 0; j <= m; ++j) {
            IntMatrix blk(rows, int(mc.gens_[size_t(k)].size()));
            bool nonzero = false;
            for (int col = 0; col < int(mc.gens_[size_t(k)].size()); ++col) {
                const auto& g = mc.gens_[size_t(k)][size_t(col)];
                if (k == 0) break;
                CellChain d = (j == 0) ? partial0(fc, g) : partialj(fc, g, j);
                const int tgt_level = g.level - j;
                for (const auto& [cell, coeff] : d) {
                    auto it = mc.index_.find({tgt_level, cell});
                    if (it == mc.index_.end() || it->second.first != k - 1)
                        throw Error(ErrorCode::DSquaredViolation,
                                    "boundary of " + g.id +
                                        " leaves the enumerated degree range");
                    blk(it->second.second, col) += coeff;
                    nonzero = true;
                }
            }
            if (nonzero || j == 0) mc.blocks_[{k, j}] = blk;
            total = total + blk;
        }
        mc.boundary_.d.push_back(total);
    }

    // Blockwise identity: for every j, Σ_q ∂_q ∂_{j-q} = 0 in each degree.
    for (int k = 2; k <= K; ++k)
        for (int j = 0; j <= 2 * m; ++j) {
            IntMatrix sum(int(mc.gens_[size_t(k - 2)].size()),
                          int(mc.gens_[size_t(k)].size()));
            for (int q = 0; q <= j; ++q)
                sum = sum + mc.block(k - 1, q) * mc.block(k, j - q);
            if (!sum.is_zero())
                throw Error(ErrorCode::DSquaredViolation,
                            "degree " + std::to_string(k) + ", level drop " +
                                std::to_string(j));
        }
    return mc;
}

HomologyGroups morse_bott_homology(const FlowCategory& fc, int k_max) {
    MorseBottComplex mc = assemble(fc, k_max);
    if (mc.boundary().dims.empty()) return HomologyGroups{};
    return homology_of_complex(mc.boundary());
}

int truncation_bound(const FlowCategory& fc, int k) {
    if (fc.empty()) return 0;
    return k + 1;
}

} // namespace mbh
