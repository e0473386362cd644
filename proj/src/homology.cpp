#include "mbh/homology.hpp"

#include <algorithm>

namespace mbh {

namespace {

std::vector<Int> mat_vec(const IntMatrix& M, const std::vector<Int>& v) {
    std::vector<Int> out(size_t(M.rows()), Int(0));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (M(i, j) != 0 && v[size_t(j)] != 0) out[size_t(i)] += M(i, j) * v[size_t(j)];
    return out;
}

Int pos_mod(const Int& x, const Int& d) {
    Int m = x % d;
    if (m < 0) m += d;
    return m;
}

} // namespace

void GradedBoundaryMatrices::check_composition() const {
    for (int k = 1; k <= top(); ++k) {
        if (d_at(k - 1).cols() != d_at(k).rows())
            throw Error(ErrorCode::CompositionNotZero,
                        "shape mismatch between degrees " + std::to_string(k - 1) +
                            " and " + std::to_string(k));
        if (!(d_at(k - 1) * d_at(k)).is_zero())
            throw Error(ErrorCode::CompositionNotZero,
                        "d∘d != 0 at degree " + std::to_string(k));
    }
}

HomologyPresentation present_homology(const GradedBoundaryMatrices& b, int k) {
    HomologyPresentation p;
    const int ck = b.dim_at(k);
    IntMatrix A = b.d_at(k);
    SmithResult snfA = smith_normal_form(A);
    p.rank_dk = snfA.rank;
    p.z = ck - snfA.rank;
    p.Vinv = snfA.V_inv;
    p.Z = IntMatrix(ck, p.z);
    for (int i = 0; i < ck; ++i)
        for (int j = 0; j < p.z; ++j) p.Z(i, j) = snfA.V(i, snfA.rank + j);

    // Relation matrix: coordinates of the d[k+1] columns in the kernel basis.
    IntMatrix B = b.d_at(k + 1);
    IntMatrix Y = p.Vinv * B;
    for (int i = 0; i < p.rank_dk; ++i)
        for (int j = 0; j < Y.cols(); ++j)
            if (Y(i, j) != 0)
                throw Error(ErrorCode::CompositionNotZero,
                            "image of degree " + std::to_string(k + 1) +
                                " boundary is not contained in the cycle group");
    IntMatrix X(p.z, B.cols());
    for (int i = 0; i < p.z; ++i)
        for (int j = 0; j < B.cols(); ++j) X(i, j) = Y(p.rank_dk + i, j);
    p.snfX = smith_normal_form(X);

    p.invariants.resize(size_t(p.z));
    for (int i = 0; i < p.z; ++i)
        p.invariants[size_t(i)] = (i < p.snfX.S.cols()) ? p.snfX.S(i, i) : Int(0);
    for (int i = 0; i < p.z; ++i)
        if (p.invariants[size_t(i)] != 1) p.live.push_back(i);
    return p;
}

std::vector<Int> HomologyPresentation::class_of(const std::vector<Int>& cycle) const {
    std::vector<Int> y = mat_vec(Vinv, cycle);
    for (int i = 0; i < rank_dk; ++i)
        if (y[size_t(i)] != 0)
            throw Error(ErrorCode::ValidationError, "class_of called on a non-cycle");
    std::vector<Int> ker(y.begin() + rank_dk, y.end());
    std::vector<Int> u = mat_vec(snfX.U, ker);
    std::vector<Int> out;
    out.reserve(live.size());
    for (int i : live) {
        const Int& inv = invariants[size_t(i)];
        out.push_back(inv >= 2 ? pos_mod(u[size_t(i)], inv) : u[size_t(i)]);
    }
    return out;
}

std::vector<Int> HomologyPresentation::generator(int live_index) const {
    const int i = live[size_t(live_index)];
    std::vector<Int> u(size_t(z), Int(0));
    for (int r = 0; r < z; ++r) u[size_t(r)] = snfX.U_inv(r, i);
    return mat_vec(Z, u);
}

HomologyGroups homology_of_complex(const GradedBoundaryMatrices& b) {
    b.check_composition();
    HomologyGroups out;
    for (int k = 0; k <= b.top(); ++k) {
        HomologyPresentation p = present_homology(b, k);
        HomologyGroup g;
        for (int i : p.live) {
            const Int& inv = p.invariants[size_t(i)];
            if (inv == 0)
                ++g.betti;
            else
                g.torsion.push_back(inv);
        }
        std::sort(g.torsion.begin(), g.torsion.end());
        out.groups.push_back(std::move(g));
    }
    return out;
}

std::string HomologyGroups::to_string() const {
    std::string s;
    for (size_t k = 0; k < groups.size(); ++k) {
        if (k) s += ' ';
        s += "H_" + std::to_string(k) + "=";
        const auto& g = groups[k];
        std::string body;
        if (g.betti == 1)
            body = "Z";
        else if (g.betti > 1)
            body = "Z^" + std::to_string(g.betti);
        for (const auto& t : g.torsion) {
            if (!body.empty()) body += "+";
            body += "Z/" + t.str();
        }
        if (body.empty()) body = "0";
        s += body;
    }
    return s;
}

std::vector<InducedMapDegree>
induced_map_on_homology(const std::vector<IntMatrix>& f,
                        const GradedBoundaryMatrices& source,
                        const GradedBoundaryMatrices& target) {
    const int K = std::max(source.top(), target.top());
    auto f_at = [&](int k) -> IntMatrix {
        if (k >= 0 && k < int(f.size())) return f[size_t(k)];
        return IntMatrix(target.dim_at(k), source.dim_at(k));
    };

    for (int k = 0; k <= K; ++k) {
        IntMatrix lhs = target.d_at(k) * f_at(k);
        IntMatrix rhs = f_at(k - 1) * source.d_at(k);
        if (lhs != rhs)
            throw Error(ErrorCode::NotAChainMap, "degree " + std::to_string(k));
    }

    std::vector<InducedMapDegree> out;
    for (int k = 0; k <= K; ++k) {
        HomologyPresentation ps = present_homology(source, k);
        HomologyPresentation pt = present_homology(target, k);
        InducedMapDegree deg;
        deg.matrix = IntMatrix(int(pt.live.size()), int(ps.live.size()));
        for (int j = 0; j < int(ps.live.size()); ++j) {
            std::vector<Int> img = mat_vec(f_at(k), ps.generator(j));
            std::vector<Int> cls = pt.class_of(img);
            for (int i = 0; i < int(pt.live.size()); ++i) deg.matrix(i, j) = cls[size_t(i)];
        }
        for (int i : ps.live) deg.source_invariants.push_back(ps.invariants[size_t(i)]);
        for (int i : pt.live) deg.target_invariants.push_back(pt.invariants[size_t(i)]);

        // Isomorphism test: same invariant factors and the map is onto.  A
        // surjective endomorphism-shaped map between isomorphic finitely
        // generated abelian groups is an isomorphism.
        auto sorted = [](std::vector<Int> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        bool same = sorted(deg.source_invariants) == sorted(deg.target_invariants);
        if (same) {
            // coker of [matrix | torsion relations] must vanish
            int extra = 0;
            for (const auto& t : deg.target_invariants)
                if (t >= 2) ++extra;
            IntMatrix M(deg.matrix.rows(), deg.matrix.cols() + extra);
            for (int i = 0; i < deg.matrix.rows(); ++i)
                for (int j = 0; j < deg.matrix.cols(); ++j) M(i, j) = deg.matrix(i, j);
            int c = deg.matrix.cols();
            for (int i = 0; i < int(deg.target_invariants.size()); ++i)
                if (deg.target_invariants[size_t(i)] >= 2)
                    M(i, c++) = deg.target_invariants[size_t(i)];
            SmithResult s = smith_normal_form(M);
            bool onto = s.rank == M.rows();
            for (int i = 0; i < s.rank && onto; ++i)
                if (s.S(i, i) != 1) onto = false;
            deg.iso = onto;
        } else {
            deg.iso = false;
        }
        out.push_back(std::move(deg));
    }
    return out;
}

} // namespace mbh
