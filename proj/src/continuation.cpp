#include "mbh/continuation.hpp"

namespace mbh {

void ContinuationData::finalize() {
    if (!source || !target)
        throw Error(ErrorCode::SchemaError, "continuation lacks source or target");
    for (auto& b : bundles) {
        const CriticalLevel* tgt = target->level(b.to);
        if (!tgt)
            throw Error(ErrorCode::SchemaError,
                        "continuation bundle targets missing level " +
                            std::to_string(b.to));
        for (auto& piece : b.pieces) {
            const LevelComponent* base =
                source->component(b.from, piece.bundle.base_component);
            if (!base)
                throw Error(ErrorCode::SchemaError,
                            "continuation bundle references unknown component " +
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
                                    "endpoint image names unknown cell " + tgt_id);
                    chain_add(images[size_t(c)], t, coeff);
                }
            }
            piece.endpoint = std::make_shared<CellularChainMap>(
                piece.total, tgt->combined, std::move(images));
        }
        for (const auto& tr : b.transfers) {
            const LevelComponent* base = source->component(b.from, tr.base_component);
            if (!base)
                throw Error(ErrorCode::SchemaError,
                            "transfer references unknown component " +
                                tr.base_component);
            for (const auto& [cell_id, img] : tr.images) {
                int c = base->complex.find(cell_id);
                if (c < 0)
                    throw Error(ErrorCode::SchemaError,
                                "transfer names unknown cell " + cell_id);
                const int want = base->complex.cell(c).dim + b.from - b.to + degree_shift;
                for (const auto& [coeff, tgt_id] : img) {
                    (void)coeff;
                    int t = tgt->combined.find(tgt_id);
                    if (t < 0)
                        throw Error(ErrorCode::SchemaError,
                                    "transfer image names unknown cell " + tgt_id);
                    if (tgt->combined.cell(t).dim != want)
                        throw Error(ErrorCode::SchemaError,
                                    "transfer image of " + cell_id +
                                        " has the wrong degree");
                }
            }
        }
    }
}

ValidationReport ContinuationData::validate() const {
    ValidationReport rep;
    for (const auto& b : bundles) {
        for (const auto& piece : b.pieces) {
            const int want = b.from - b.to + degree_shift;
            if (want < 0) {
                rep.add("bundle " + std::to_string(b.from) + " -> " +
                        std::to_string(b.to) +
                        ": index-raising data must use transfers, not pieces");
                continue;
            }
            if (!piece.bundle.fiber.fundamental) {
                rep.add("piece over " + piece.bundle.base_component +
                        " has no fiber fundamental chain");
                continue;
            }
            if (piece.bundle.fiber_degree() != want)
                rep.add("piece over " + piece.bundle.base_component + " of bundle " +
                        std::to_string(b.from) + " -> " + std::to_string(b.to) +
                        ": fiber degree " +
                        std::to_string(piece.bundle.fiber_degree()) + ", expected " +
                        std::to_string(want));
            ValidationReport r = piece.bundle.fiber.validate(false);
            rep.merge(r);
        }
        for (const auto& tr : b.transfers) {
            const LevelComponent* base = source->component(b.from, tr.base_component);
            if (base && base->dim + b.from + degree_shift < b.to)
                rep.add("transfer over " + tr.base_component + " of bundle " +
                        std::to_string(b.from) + " -> " + std::to_string(b.to) +
                        " violates the degree bound");
        }
    }
    return rep;
}

ValidationReport continuation_boundary_validate(const ContinuationData& cd) {
    ValidationReport rep = cd.validate();
    auto fund_coeff = [](const std::vector<const ModuliPiece*>& pieces,
                        const std::string& cell_id) -> std::optional<Int> {
        for (const ModuliPiece* p : pieces) {
            if (!p->bundle.fiber.fundamental) continue;
            int c = p->bundle.fiber.find(cell_id);
            if (c < 0) continue;
            auto it = p->bundle.fiber.fundamental->find(c);
            if (it != p->bundle.fiber.fundamental->end()) return it->second;
        }
        return std::nullopt;
    };
    auto source_moduli = [&](int from, int to) {
        std::vector<const ModuliPiece*> out;
        if (const ModuliBundle* b = cd.source->bundle(from, to))
            for (const auto& p : b->pieces) out.push_back(&p);
        return out;
    };
    auto target_moduli = [&](int from, int to) {
        std::vector<const ModuliPiece*> out;
        if (const ModuliBundle* b = cd.target->bundle(from, to))
            for (const auto& p : b->pieces) out.push_back(&p);
        return out;
    };
    auto continuation_pieces = [&](int from, int to) {
        std::vector<const ModuliPiece*> out;
        for (const auto& b : cd.bundles)
            if (b.from == from && b.to == to)
                for (const auto& p : b.pieces) out.push_back(&p);
        return out;
    };

    for (const auto& b : cd.bundles)
        for (const auto& piece : b.pieces) {
            if (!piece.bundle.fiber.fundamental) continue;
            CellChain dfund =
                piece.bundle.fiber.boundary(*piece.bundle.fiber.fundamental);
            const int sgn = ((b.from + piece.bundle.base_dim) % 2 == 0) ? 1 : -1;
            for (const auto& [cell, coeff] : dfund) {
                const std::string& cid = piece.bundle.fiber.cell(cell).id;
                const StratumLabel* label = nullptr;
                bool dup = false;
                for (const auto& s : piece.strata)
                    if (s.fiber_boundary_cell == cid) {
                        if (label) dup = true;
                        label = &s;
                    }
                if (dup) {
                    rep.add("cell " + cid + " labeled twice");
                    continue;
                }
                if (!label) {
                    rep.add("fiber boundary cell " + cid +
                            " of continuation bundle " + std::to_string(b.from) +
                            " -> " + std::to_string(b.to) + " has no stratum label");
                    continue;
                }
                std::optional<Int> cl, cr;
                if (label->family == 1) {
                    // source moduli (i -> n) followed by continuation (n -> j)
                    cl = fund_coeff(source_moduli(b.from, label->via_index),
                                    label->left_cell);
                    cr = fund_coeff(
                        continuation_pieces(label->via_index, b.to),
                        label->right_cell);
                } else if (label->family == -1) {
                    // continuation (i -> n) followed by target moduli (n -> j)
                    cl = fund_coeff(continuation_pieces(b.from, label->via_index),
                                    label->left_cell);
                    cr = fund_coeff(target_moduli(label->via_index, b.to),
                                    label->right_cell);
                } else {
                    rep.add("cell " + cid + ": stratum family must be left or right");
                    continue;
                }
                if (!cl || !cr) {
                    rep.add("cell " + cid +
                            ": stratum factors not found in the referenced data");
                    continue;
                }
                Int expect = Int(sgn) * Int(label->family) * (*cl) * (*cr);
                if (coeff != expect)
                    rep.add("cell " + cid + ": coefficient " + coeff.str() +
                            " does not match the signed stratum product " +
                            expect.str());
            }
            // labels must refer to actual fiber boundary cells
            for (const auto& s : piece.strata) {
                int c = piece.bundle.fiber.find(s.fiber_boundary_cell);
                if (c < 0 || dfund.find(c) == dfund.end())
                    rep.add("stratum label names " + s.fiber_boundary_cell +
                            ", which is not a fiber boundary cell");
            }
        }
    return rep;
}

std::vector<IntMatrix> chain_map_from_continuation(const ContinuationData& cd,
                                                   const MorseBottComplex& src,
                                                   const MorseBottComplex& tgt) {
    const int shift = cd.degree_shift;
    std::vector<IntMatrix> F;
    for (int k = 0; k <= src.top(); ++k) {
        const int kt = k + shift;
        const int rows =
            (kt >= 0 && kt <= tgt.top()) ? int(tgt.generators()[size_t(kt)].size()) : 0;
        IntMatrix m(rows, int(src.generators()[size_t(k)].size()));
        for (int col = 0; col < int(src.generators()[size_t(k)].size()); ++col) {
            const auto& g = src.generators()[size_t(k)][size_t(col)];
            const CriticalLevel* lv = cd.source->level(g.level);
            const int comp = lv->component_of[size_t(g.cell)];
            const std::string& comp_id = lv->components[size_t(comp)].id;
            const std::string& cell_id = lv->combined.cell(g.cell).id;
            for (const auto& b : cd.bundles) {
                if (b.from != g.level) continue;
                CellChain img;
                for (const auto& piece : b.pieces) {
                    if (piece.bundle.base_component != comp_id) continue;
                    const int fold =
                        ((piece.bundle.base_dim * piece.bundle.total_degree()) % 2 ==
                         0)
                            ? 1
                            : -1;
                    const Int scale = Int(fold) * piece.bundle.orientation_coeff;
                    const Cubulation& base = lv->components[size_t(comp)].complex;
                    int base_cell = base.find(cell_id);
                    CellChain lift;
                    for (const auto& [t, c] : *piece.bundle.fiber.fundamental)
                        chain_add(lift,
                                  Cubulation::product_cell(piece.bundle.fiber,
                                                           base_cell, t),
                                  c * scale);
                    img = chain_sum(img, piece.endpoint->apply(lift));
                }
                for (const auto& tr : b.transfers) {
                    if (tr.base_component != comp_id) continue;
                    auto it = tr.images.find(cell_id);
                    if (it == tr.images.end()) continue;
                    for (const auto& [coeff, tgt_id] : it->second)
                        chain_add(img, cd.target->level(b.to)->combined.find(tgt_id),
                                  coeff);
                }
                for (const auto& [cell, coeff] : img) {
                    int row = tgt.position(b.to, cell);
                    if (row < 0)
                        throw Error(ErrorCode::ValidationError,
                                    "continuation image leaves the enumerated range");
                    m(row, col) += coeff;
                }
            }
        }
        F.push_back(std::move(m));
    }
    return F;
}

bool verify_chain_map(const std::vector<IntMatrix>& F,
                      const GradedBoundaryMatrices& source,
                      const GradedBoundaryMatrices& target) {
    auto f_at = [&](int k) -> IntMatrix {
        if (k >= 0 && k < int(F.size())) return F[size_t(k)];
        return IntMatrix(target.dim_at(k), source.dim_at(k));
    };
    const int K = std::max(source.top(), target.top());
    for (int k = 0; k <= K; ++k)
        if (target.d_at(k) * f_at(k) != f_at(k - 1) * source.d_at(k)) return false;
    return true;
}

bool verify_chain_homotopy(const HomotopyData& hd) {
    MorseBottComplex c1 = assemble(*hd.f1), c2 = assemble(*hd.f2),
                     c3 = assemble(*hd.f3), c4 = assemble(*hd.f4);
    std::vector<IntMatrix> F21 = chain_map_from_continuation(*hd.F21, c1, c2);
    std::vector<IntMatrix> F31 = chain_map_from_continuation(*hd.F31, c1, c3);
    std::vector<IntMatrix> F42 = chain_map_from_continuation(*hd.F42, c2, c4);
    std::vector<IntMatrix> F43 = chain_map_from_continuation(*hd.F43, c3, c4);
    std::vector<IntMatrix> H = chain_map_from_continuation(hd.H, c1, c4);

    const GradedBoundaryMatrices& d1 = c1.boundary();
    const GradedBoundaryMatrices& d4 = c4.boundary();
    auto at = [](const std::vector<IntMatrix>& v, int k, int rows,
                 int cols) -> IntMatrix {
        if (k >= 0 && k < int(v.size())) return v[size_t(k)];
        return IntMatrix(rows, cols);
    };
    const int K = std::max(c1.top(), c4.top());
    for (int k = 0; k <= K; ++k) {
        const int n1k = d1.dim_at(k);
        const int n4k = d4.dim_at(k);
        IntMatrix lhs =
            at(F43, k, n4k, c3.boundary().dim_at(k)) *
                at(F31, k, c3.boundary().dim_at(k), n1k) -
            at(F42, k, n4k, c2.boundary().dim_at(k)) *
                at(F21, k, c2.boundary().dim_at(k), n1k);
        IntMatrix rhs = d4.d_at(k + 1) * at(H, k, d4.dim_at(k + 1), n1k) +
                        at(H, k - 1, d4.dim_at(k), d1.dim_at(k - 1)) * d1.d_at(k);
        if (lhs != rhs) return false;
    }
    return true;
}

ContinuationData make_identity_continuation(const FlowCategory& fc) {
    ContinuationData cd;
    cd.name = fc.name + "-identity";
    cd.source_name = cd.target_name = fc.name;
    cd.source = cd.target = &fc;
    for (const auto& [i, lv] : fc.levels) {
        ContinuationBundle b;
        b.from = b.to = i;
        for (const auto& comp : lv.components) {
            ModuliPiece piece;
            piece.bundle.base_component = comp.id;
            piece.bundle.base_dim = comp.dim;
            piece.bundle.fiber.add_cell("pt", 0);
            CellChain f;
            chain_add(f, 0, 1);
            piece.bundle.fiber.fundamental = f;
            piece.bundle.orientation_coeff = (comp.dim % 2 == 0) ? 1 : -1;
            for (int c = 0; c < comp.complex.size(); ++c)
                piece.endpoint_images[comp.complex.cell(c).id + "*pt"] = {
                    {Int(1), comp.complex.cell(c).id}};
            b.pieces.push_back(std::move(piece));
        }
        cd.bundles.push_back(std::move(b));
    }
    cd.finalize();
    return cd;
}

RepresentingChainSystem build_representing_chains(int q,
                                                  const TrivialBundlePiece& piece) {
    if (!piece.fiber.fundamental)
        throw Error(ErrorCode::NoFundamentalChain, piece.base_component);
    RepresentingChainSystem sys;
    const Cubulation& Q = cube_complex(q);
    Cubulation total = Cubulation::product(Q, piece.fiber);
    const int b = piece.base_dim;
    const int fold = ((b * piece.total_degree()) % 2 == 0) ? 1 : -1;
    const Int scale = Int(fold) * piece.orientation_coeff;
    const int top = cube_top_cell(q);

    CellChain s_top;
    for (const auto& [t, c] : *piece.fiber.fundamental)
        chain_add(s_top, Cubulation::product_cell(piece.fiber, top, t), c * scale);
    sys.chains["top"] = s_top;

    // codimension-one subdomains: cube faces carry the same piece, fiber
    // boundary strata pick up the (-1)^b fold ratio of the next level down
    for (const auto& e : Q.cell(top).boundary) {
        CellChain s;
        for (const auto& [t, c] : *piece.fiber.fundamental)
            chain_add(s, Cubulation::product_cell(piece.fiber, e.target, t),
                      c * scale);
        sys.chains["face:" + Q.cell(e.target).id] = s;
    }
    CellChain dfund = piece.fiber.boundary(*piece.fiber.fundamental);
    const Int strat_scale = scale * Int((b % 2 == 0) ? 1 : -1);
    for (const auto& [t, c] : dfund) {
        (void)c;
        CellChain s;
        chain_add(s, Cubulation::product_cell(piece.fiber, top, t), strat_scale);
        sys.chains["stratum:" + piece.fiber.cell(t).id] = s;
    }

    // boundary compatibility: ∂(s_top) must equal the fibered boundary
    // expansion realized through the subdomain chains
    CellChain expect;
    for (const auto& e : Q.cell(top).boundary) {
        const CellChain& s = sys.chains["face:" + Q.cell(e.target).id];
        expect = chain_sum(expect, chain_scale(s, e.sign));
    }
    const int fb = ((q + b) % 2 == 0) ? 1 : -1;
    for (const auto& [t, c] : dfund) {
        const CellChain& s = sys.chains["stratum:" + piece.fiber.cell(t).id];
        expect = chain_sum(expect, chain_scale(s, c * fb));
    }
    sys.boundary_compatible = (total.boundary(s_top) == expect);
    return sys;
}

std::vector<IntMatrix> perturb_chain_map(const std::vector<IntMatrix>& F,
                                         const std::vector<IntMatrix>& w,
                                         const GradedBoundaryMatrices& source,
                                         const GradedBoundaryMatrices& target) {
    auto at = [&](const std::vector<IntMatrix>& v, int k, int rows,
                  int cols) -> IntMatrix {
        if (k >= 0 && k < int(v.size())) return v[size_t(k)];
        return IntMatrix(rows, cols);
    };
    std::vector<IntMatrix> out;
    const int K = int(F.size()) - 1;
    for (int k = 0; k <= K; ++k) {
        IntMatrix p = F[size_t(k)] +
                      target.d_at(k + 1) * at(w, k, target.dim_at(k + 1), source.dim_at(k)) +
                      at(w, k - 1, target.dim_at(k), source.dim_at(k - 1)) * source.d_at(k);
        out.push_back(std::move(p));
    }
    return out;
}

IndependenceReport independence_check(const FlowCategory& A, const FlowCategory& B,
                                      const ContinuationData& AB,
                                      const ContinuationData& BA) {
    MorseBottComplex ca = assemble(A), cb = assemble(B);
    std::vector<IntMatrix> F = chain_map_from_continuation(AB, ca, cb);
    std::vector<IntMatrix> G = chain_map_from_continuation(BA, cb, ca);

    IndependenceReport rep;
    rep.forward = induced_map_on_homology(F, ca.boundary(), cb.boundary());
    rep.backward = induced_map_on_homology(G, cb.boundary(), ca.boundary());
    for (const auto& d : rep.forward)
        if (!d.iso) rep.all_isos = false;
    for (const auto& d : rep.backward)
        if (!d.iso) rep.all_isos = false;

    auto composite = [](const std::vector<IntMatrix>& outer,
                        const std::vector<IntMatrix>& inner) {
        std::vector<IntMatrix> out;
        for (size_t k = 0; k < inner.size() && k < outer.size(); ++k)
            out.push_back(outer[k] * inner[k]);
        return out;
    };
    auto identity_like = [](const GradedBoundaryMatrices& b) {
        std::vector<IntMatrix> out;
        for (int k = 0; k <= b.top(); ++k)
            out.push_back(IntMatrix::identity(b.dim_at(k)));
        return out;
    };
    auto same_induced = [](const std::vector<InducedMapDegree>& x,
                           const std::vector<InducedMapDegree>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i].matrix != y[i].matrix) return false;
        return true;
    };
    auto ga = induced_map_on_homology(composite(G, F), ca.boundary(), ca.boundary());
    auto ia = induced_map_on_homology(identity_like(ca.boundary()), ca.boundary(),
                                      ca.boundary());
    auto gb = induced_map_on_homology(composite(F, G), cb.boundary(), cb.boundary());
    auto ib = induced_map_on_homology(identity_like(cb.boundary()), cb.boundary(),
                                      cb.boundary());
    rep.composites_identity = same_induced(ga, ia) && same_induced(gb, ib);
    return rep;
}

} // namespace mbh
