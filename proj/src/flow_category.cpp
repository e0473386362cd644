#include "mbh/flow_category.hpp"

namespace mbh {

void CriticalLevel::finalize() {
    combined = Cubulation();
    component_of.clear();
    for (int ci = 0; ci < int(components.size()); ++ci) {
        const Cubulation& K = components[size_t(ci)].complex;
        for (int c = 0; c < K.size(); ++c) {
            combined.add_cell(K.cell(c).id, K.cell(c).dim);
            component_of.push_back(ci);
        }
    }
    for (const auto& comp : components) {
        const Cubulation& K = comp.complex;
        for (int c = 0; c < K.size(); ++c) {
            int cc = combined.find(K.cell(c).id);
            for (const auto& e : K.cell(c).boundary)
                combined.add_boundary(cc, e.sign, e.axis, e.side,
                                      K.cell(e.target).id);
        }
    }
}

int CriticalLevel::total_dim() const {
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.dim);
    return d;
}

const CriticalLevel* FlowCategory::level(int i) const {
    auto it = levels.find(i);
    return it == levels.end() ? nullptr : &it->second;
}

const LevelComponent* FlowCategory::component(int i, const std::string& id) const {
    const CriticalLevel* lv = level(i);
    if (!lv) return nullptr;
    for (const auto& c : lv->components)
        if (c.id == id) return &c;
    return nullptr;
}

const ModuliBundle* FlowCategory::bundle(int from, int to) const {
    for (const auto& b : moduli)
        if (b.from == from && b.to == to) return &b;
    return nullptr;
}

void FlowCategory::finalize() {
    for (auto& [i, lv] : levels) {
        lv.index = i;
        lv.finalize();
    }
    for (auto& b : moduli) {
        const CriticalLevel* tgt = level(b.to);
        if (!tgt)
            throw Error(ErrorCode::SchemaError,
                        "bundle targets missing level " + std::to_string(b.to));
        for (auto& piece : b.pieces) {
            const LevelComponent* base = component(b.from, piece.bundle.base_component);
            if (!base)
                throw Error(ErrorCode::SchemaError,
                            "bundle from level " + std::to_string(b.from) +
                                " references unknown component " +
                                piece.bundle.base_component);
            piece.bundle.base_dim = base->dim;
            piece.total = Cubulation::product(base->complex, piece.bundle.fiber);
            std::vector<CellChain> images(size_t(piece.total.size()));
            for (const auto& [cell_id, img] : piece.endpoint_images) {
                int c = piece.total.find(cell_id);
                if (c < 0)
                    throw Error(ErrorCode::SchemaError,
                                "endpoint map names unknown total cell " + cell_id);
                for (const auto& [coeff, tgt_id] : img) {
                    int t = tgt->combined.find(tgt_id);
                    if (t < 0)
                        throw Error(ErrorCode::SchemaError,
                                    "endpoint image names unknown cell " + tgt_id +
                                        " on level " + std::to_string(b.to));
                    chain_add(images[size_t(c)], t, coeff);
                }
            }
            piece.endpoint = std::make_shared<CellularChainMap>(
                piece.total, tgt->combined, std::move(images));
        }
    }
}

ValidationReport validate_weak_self_indexing(const FlowCategory& fc) {
    ValidationReport rep;
    for (const auto& b : fc.moduli)
        if (b.from <= b.to)
            rep.add("bundle " + std::to_string(b.from) + " -> " +
                    std::to_string(b.to) + " violates weak self-indexing");
    return rep;
}

ValidationReport validate_degrees(const FlowCategory& fc) {
    ValidationReport rep;
    for (const auto& b : fc.moduli) {
        const int j = b.from - b.to;
        for (const auto& piece : b.pieces) {
            if (!piece.bundle.fiber.fundamental) {
                rep.add("piece over " + piece.bundle.base_component +
                        " has no fiber fundamental chain");
                continue;
            }
            const int expect = j - 1;
            if (piece.bundle.fiber_degree() != expect)
                rep.add("piece over " + piece.bundle.base_component + " of bundle " +
                        std::to_string(b.from) + " -> " + std::to_string(b.to) +
                        ": fiber degree " +
                        std::to_string(piece.bundle.fiber_degree()) +
                        ", expected " + std::to_string(expect));
        }
    }
    return rep;
}

namespace {

// Coefficient of cell_id in the fiber fundamental chain of any piece of the
// given bundle; nullopt if it appears nowhere.
std::optional<Int> fundamental_coeff(const ModuliBundle* b, const std::string& cell_id,
                                     int* dim_out = nullptr) {
    if (!b) return std::nullopt;
    for (const auto& piece : b->pieces) {
        if (!piece.bundle.fiber.fundamental) continue;
        int c = piece.bundle.fiber.find(cell_id);
        if (c < 0) continue;
        auto it = piece.bundle.fiber.fundamental->find(c);
        if (it == piece.bundle.fiber.fundamental->end()) continue;
        if (dim_out) *dim_out = piece.bundle.fiber.cell(c).dim;
        return it->second;
    }
    return std::nullopt;
}

} // namespace

FormalChain moduli_boundary(const FlowCategory& fc, int i, int j) {
    FormalChain out;
    const ModuliBundle* b = fc.bundle(i, i - j);
    if (!b) return out;
    for (const auto& piece : b->pieces) {
        if (!piece.bundle.fiber.fundamental)
            throw Error(ErrorCode::NoFundamentalChain, piece.bundle.base_component);
        CellChain dfund = piece.bundle.fiber.boundary(*piece.bundle.fiber.fundamental);
        const int sgn = ((i + piece.bundle.base_dim) % 2 == 0) ? 1 : -1;
        for (const auto& [cell, coeff] : dfund) {
            const std::string& cid = piece.bundle.fiber.cell(cell).id;
            const StratumLabel* label = nullptr;
            for (const auto& s : piece.strata)
                if (s.fiber_boundary_cell == cid) {
                    if (label)
                        throw Error(ErrorCode::StrataMismatch,
                                    "cell " + cid + " labeled twice");
                    label = &s;
                }
            if (!label)
                throw Error(ErrorCode::StrataMismatch,
                            "fiber boundary cell " + cid + " of bundle " +
                                std::to_string(i) + " -> " + std::to_string(i - j) +
                                " has no stratum label");
            const int n = label->via_index;
            if (n <= i - j || n >= i)
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": intermediate index " +
                                std::to_string(n) + " outside (" +
                                std::to_string(i - j) + ", " + std::to_string(i) + ")");
            if (!fc.level(n))
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": level " + std::to_string(n) +
                                " is empty, summand must vanish");
            int dl = 0, dr = 0;
            auto cl = fundamental_coeff(fc.bundle(i, n), label->left_cell, &dl);
            auto cr = fundamental_coeff(fc.bundle(n, i - j), label->right_cell, &dr);
            if (!cl)
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": left cell " + label->left_cell +
                                " not in the fundamental chain of the (" +
                                std::to_string(i) + "," + std::to_string(n) +
                                ") moduli data");
            if (!cr)
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": right cell " + label->right_cell +
                                " not in the fundamental chain of the (" +
                                std::to_string(n) + "," + std::to_string(i - j) +
                                ") moduli data");
            if (dl + dr != piece.bundle.fiber_degree() - 1)
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": stratum dimensions do not add up");
            if (coeff != Int(sgn) * (*cl) * (*cr))
                throw Error(ErrorCode::StrataMismatch,
                            "cell " + cid + ": coefficient " + coeff.str() +
                                " does not match the signed product of the factors");
            GeneratorId g{"M(" + std::to_string(i) + "," + std::to_string(n) + "):" +
                              label->left_cell + " x M(" + std::to_string(n) + "," +
                              std::to_string(i - j) + "):" + label->right_cell,
                          piece.bundle.total_degree() - 1, GenKind::ModuliComponent};
            out.add(g, coeff);
        }
    }
    return out;
}

ValidationReport validate_moduli_d_squared(const FlowCategory& fc) {
    ValidationReport rep;
    for (const auto& b : fc.moduli) {
        try {
            moduli_boundary(fc, b.from, b.from - b.to);
        } catch (const Error& e) {
            rep.add(e.what());
        }
    }

    // Formal second boundary over the occupied index range: each triple
    // composite must appear twice with cancelling signs.
    auto b_of = [&](int i) {
        const CriticalLevel* lv = fc.level(i);
        return (lv && !lv->components.empty()) ? lv->components.front().dim : 0;
    };
    for (const auto& bun : fc.moduli) {
        const int i = bun.from, to = bun.to;
        const int bi = b_of(i);
        std::map<std::pair<int, int>, int> acc; // (s, t) -> signed count
        for (int n = to + 1; n < i; ++n) {
            if (!fc.level(n)) continue;
            // ∂(left) x right
            for (int s = n + 1; s < i; ++s) {
                if (!fc.level(s)) continue;
                acc[{s, n}] += 1; // (-1)^{i+bi} * (-1)^{i+bi}
            }
            // left x ∂(right)
            const int degL = (i - n) + bi - 1;
            const int bn = b_of(n);
            for (int t = to + 1; t < n; ++t) {
                if (!fc.level(t)) continue;
                int e = (i + bi) + (degL + bn) + (n + bn);
                acc[{n, t}] += (e % 2 == 0) ? 1 : -1;
            }
        }
        for (const auto& [key, v] : acc)
            if (v != 0)
                rep.add("second boundary of moduli data " + std::to_string(i) +
                        " -> " + std::to_string(to) + " fails to cancel through (" +
                        std::to_string(key.first) + "," + std::to_string(key.second) +
                        ")");
    }
    return rep;
}

ValidationReport validate_flow_category(const FlowCategory& fc) {
    ValidationReport rep;
    for (const auto& [i, lv] : fc.levels) {
        for (const auto& comp : lv.components) {
            ValidationReport r = comp.complex.validate();
            for (auto& v : r.violations)
                rep.add("level " + std::to_string(i) + " component " + comp.id +
                        ": " + v);
            if (!comp.complex.fundamental)
                rep.add("level " + std::to_string(i) + " component " + comp.id +
                        ": missing fundamental chain");
            else if (!comp.complex.fundamental->empty() &&
                     comp.complex
                             .cell(comp.complex.fundamental->begin()->first)
                             .dim != comp.dim)
                rep.add("level " + std::to_string(i) + " component " + comp.id +
                        ": fundamental chain degree differs from stated dimension");
        }
    }
    for (const auto& b : fc.moduli)
        for (const auto& piece : b.pieces) {
            ValidationReport r = piece.bundle.fiber.validate(false);
            for (auto& v : r.violations)
                rep.add("fiber of bundle " + std::to_string(b.from) + " -> " +
                        std::to_string(b.to) + ": " + v);
        }
    rep.merge(validate_weak_self_indexing(fc));
    rep.merge(validate_degrees(fc));
    if (rep.ok()) rep.merge(validate_moduli_d_squared(fc));
    return rep;
}

} // namespace mbh
