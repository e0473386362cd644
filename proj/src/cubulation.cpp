#include "mbh/cubulation.hpp"

#include <algorithm>

namespace mbh {

void chain_add(CellChain& c, int cell, const Int& coeff) {
    if (coeff == 0) return;
    auto it = c.find(cell);
    if (it == c.end()) {
        c.emplace(cell, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

CellChain chain_scale(const CellChain& c, const Int& k) {
    CellChain r;
    if (k == 0) return r;
    for (const auto& [cell, coeff] : c) r.emplace(cell, coeff * k);
    return r;
}

CellChain chain_sum(const CellChain& a, const CellChain& b) {
    CellChain r = a;
    for (const auto& [cell, coeff] : b) chain_add(r, cell, coeff);
    return r;
}

int Cubulation::add_cell(const std::string& id, int dim,
                         std::vector<CellBoundaryEntry> boundary) {
    if (index_.count(id))
        throw Error(ErrorCode::SchemaError, "duplicate cell id: " + id);
    int idx = int(cells_.size());
    cells_.push_back(CubeCell{id, dim, std::move(boundary)});
    index_[id] = idx;
    dirty_ = true;
    return idx;
}

void Cubulation::add_boundary(int cell, int sign, int axis, int side,
                              const std::string& target_id) {
    int t = find(target_id);
    if (t < 0)
        throw Error(ErrorCode::SchemaError,
                    "boundary of " + cells_[size_t(cell)].id +
                        " references unknown cell " + target_id);
    cells_[size_t(cell)].boundary.push_back(CellBoundaryEntry{sign, axis, side, t});
}

int Cubulation::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int Cubulation::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

CellChain Cubulation::boundary_of_cell(int i) const {
    CellChain out;
    for (const auto& e : cells_[size_t(i)].boundary)
        chain_add(out, e.target, e.sign);
    return out;
}

CellChain Cubulation::boundary(const CellChain& c) const {
    CellChain out;
    for (const auto& [cell, coeff] : c)
        for (const auto& e : cells_[size_t(cell)].boundary)
            chain_add(out, e.target, coeff * Int(e.sign));
    return out;
}

ValidationReport Cubulation::validate(bool require_cycle) const {
    ValidationReport rep;
    for (const auto& c : cells_) {
        for (const auto& e : c.boundary) {
            if (e.sign != 1 && e.sign != -1)
                rep.add("cell " + c.id + ": boundary coefficient not ±1");
            if (cells_[size_t(e.target)].dim != c.dim - 1)
                rep.add("cell " + c.id + ": face " + cells_[size_t(e.target)].id +
                        " does not have dimension " + std::to_string(c.dim - 1));
        }
    }
    if (!rep.ok()) return rep;
    for (int i = 0; i < size(); ++i) {
        CellChain c;
        chain_add(c, i, 1);
        if (!boundary(boundary(c)).empty())
            rep.add("cell " + cells_[size_t(i)].id + ": second boundary nonzero");
    }
    if (fundamental) {
        int d = -2;
        for (const auto& [cell, coeff] : *fundamental) {
            (void)coeff;
            if (d == -2)
                d = cells_[size_t(cell)].dim;
            else if (cells_[size_t(cell)].dim != d)
                rep.add("fundamental chain mixes dimensions");
        }
        if (require_cycle && !boundary(*fundamental).empty())
            rep.add("fundamental chain is not a cycle");
    }
    return rep;
}

void Cubulation::refresh() const {
    if (!dirty_) return;
    by_dim_.assign(size_t(std::max(dim() + 1, 0)), {});
    pos_.assign(cells_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        auto& bucket = by_dim_[size_t(cells_[size_t(i)].dim)];
        pos_[size_t(i)] = int(bucket.size());
        bucket.push_back(i);
    }
    dirty_ = false;
}

const std::vector<int>& Cubulation::cells_of_dim(int p) const {
    refresh();
    static const std::vector<int> empty;
    if (p < 0 || p >= int(by_dim_.size())) return empty;
    return by_dim_[size_t(p)];
}

int Cubulation::position_in_dim(int cell) const {
    refresh();
    return pos_[size_t(cell)];
}

GradedBoundaryMatrices Cubulation::boundary_matrices() const {
    GradedBoundaryMatrices b;
    const int top = std::max(dim(), 0);
    for (int p = 0; p <= top; ++p) b.dims.push_back(int(cells_of_dim(p).size()));
    for (int p = 0; p <= top; ++p) {
        IntMatrix m(p == 0 ? 0 : b.dims[size_t(p - 1)], b.dims[size_t(p)]);
        if (p > 0) {
            const auto& cols = cells_of_dim(p);
            for (int j = 0; j < int(cols.size()); ++j)
                for (const auto& [cell, coeff] : boundary_of_cell(cols[size_t(j)]))
                    m(position_in_dim(cell), j) += coeff;
        }
        b.d.push_back(std::move(m));
    }
    return b;
}

Cubulation Cubulation::product(const Cubulation& A, const Cubulation& B) {
    Cubulation P;
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b)
            P.add_cell(A.cell(a).id + "*" + B.cell(b).id,
                       A.cell(a).dim + B.cell(b).dim);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b) {
            int cell = product_cell(B, a, b);
            for (const auto& e : A.cell(a).boundary)
                P.cells_[size_t(cell)].boundary.push_back(
                    CellBoundaryEntry{e.sign, e.axis, e.side, product_cell(B, e.target, b)});
            const int flip = (A.cell(a).dim % 2 == 0) ? 1 : -1;
            for (const auto& e : B.cell(b).boundary)
                P.cells_[size_t(cell)].boundary.push_back(CellBoundaryEntry{
                    e.sign * flip, e.axis + A.cell(a).dim, e.side,
                    product_cell(B, a, e.target)});
        }
    if (A.fundamental && B.fundamental) {
        CellChain f;
        for (const auto& [a, ca] : *A.fundamental)
            for (const auto& [b, cb] : *B.fundamental)
                chain_add(f, product_cell(B, a, b), ca * cb);
        P.fundamental = f;
    }
    return P;
}

std::string Cubulation::chain_to_string(const CellChain& c) const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [cell, coeff] : c) {
        if (!s.empty()) s += " + ";
        s += coeff.str() + "*" + cells_[size_t(cell)].id;
    }
    return s;
}

CellularChainMap::CellularChainMap(const Cubulation& source,
                                   const Cubulation& target,
                                   std::vector<CellChain> image)
    : source_(&source), target_(&target), image_(std::move(image)) {
    if (int(image_.size()) != source.size())
        throw Error(ErrorCode::SchemaError,
                    "cellular map must assign an image to every cell");
    for (int c = 0; c < source.size(); ++c) {
        for (const auto& [cell, coeff] : image_[size_t(c)]) {
            (void)coeff;
            if (target.cell(cell).dim != source.cell(c).dim)
                throw Error(ErrorCode::NotChainLevel,
                            source.cell(c).id + " maps to a chain of the wrong degree");
        }
    }
    for (int c = 0; c < source.size(); ++c) {
        CellChain lhs = target.boundary(image_[size_t(c)]);
        CellChain rhs = apply(source.boundary_of_cell(c));
        if (lhs != rhs)
            throw Error(ErrorCode::NotChainLevel, source.cell(c).id);
    }
}

CellChain CellularChainMap::apply(const CellChain& c) const {
    CellChain out;
    for (const auto& [cell, coeff] : c)
        for (const auto& [t, k] : image_[size_t(cell)]) chain_add(out, t, coeff * k);
    return out;
}

HomologyGroups cubical_homology(const Cubulation& K) {
    ValidationReport rep = K.validate();
    if (!rep.ok())
        throw Error(ErrorCode::ValidationError, rep.to_string());
    return homology_of_complex(K.boundary_matrices());
}

const Cubulation& cube_complex(int p) {
    static std::map<int, Cubulation> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    Cubulation K;
    BoundarySpec spec = cube_boundary_spec(p);
    // add vertices first is not needed; add in enumeration order, then wire
    for (const auto& [g, faces] : spec.face_list) {
        (void)faces;
        K.add_cell(g.name, g.degree);
    }
    for (const auto& [g, faces] : spec.face_list) {
        int c = K.find(g.name);
        for (const auto& [sign, face] : faces) {
            // recover axis/side from the names
            int axis = -1, side = 0;
            for (int i = 0; i < int(g.name.size()); ++i)
                if (g.name[size_t(i)] == '*' && face.name[size_t(i)] != '*') {
                    axis = i;
                    side = face.name[size_t(i)] == '1' ? 1 : 0;
                }
            K.add_boundary(c, sign, axis, side, face.name);
        }
    }
    return cache.emplace(p, std::move(K)).first->second;
}

int cube_cell(int p, const std::string& face_name) {
    int i = cube_complex(p).find(face_name);
    if (i < 0)
        throw Error(ErrorCode::UnknownGenerator, "face " + face_name);
    return i;
}

int cube_top_cell(int p) {
    return cube_cell(p, std::string(size_t(p), '*'));
}

bool SingularCube::independent_of_axis(int axis) const {
    const Cubulation& K = cube_complex(p());
    for (int c = 0; c < K.size(); ++c) {
        const std::string& nm = K.cell(c).id;
        char st = nm[size_t(axis)];
        if (st == '*') {
            if (!map.image_of(c).empty()) return false;
        } else if (st == '0') {
            std::string other = nm;
            other[size_t(axis)] = '1';
            if (map.image_of(c) != map.image_of(K.find(other))) return false;
        }
    }
    return true;
}

bool SingularCube::is_degenerate() const {
    for (int axis = 0; axis < p(); ++axis)
        if (independent_of_axis(axis)) return true;
    return false;
}

std::string SingularCube::canonical_key() const {
    const Cubulation& K = cube_complex(p());
    std::string key = std::to_string(p()) + "|";
    for (int c = 0; c < K.size(); ++c) {
        key += K.cell(c).id + ":";
        for (const auto& [t, coeff] : map.image_of(c))
            key += map.target().cell(t).id + "=" + coeff.str() + ",";
        key += ";";
    }
    return key;
}

std::vector<std::pair<Int, SingularCube>>
normalize(const std::vector<std::pair<Int, SingularCube>>& terms) {
    std::vector<std::pair<Int, SingularCube>> out;
    std::map<std::string, size_t> seen;
    for (const auto& [coeff, cube] : terms) {
        if (cube.is_degenerate()) continue;
        std::string key = cube.canonical_key();
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = out.size();
            out.emplace_back(coeff, cube);
        } else {
            out[it->second].first += coeff;
        }
    }
    std::erase_if(out, [](const auto& t) { return t.first == 0; });
    return out;
}

CellChain chain_value(const std::vector<std::pair<Int, SingularCube>>& terms) {
    CellChain out;
    for (const auto& [coeff, cube] : terms)
        for (const auto& [t, k] : cube.map.image_of(cube_top_cell(cube.p())))
            chain_add(out, t, coeff * k);
    return out;
}

} // namespace mbh
