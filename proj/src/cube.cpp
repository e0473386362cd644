#include "mbh/cube.hpp"

namespace mbh {

CubeFace CubeFace::from_name(const std::string& s) {
    CubeFace f;
    for (char c : s) {
        if (c == '*')
            f.status.push_back(Free);
        else if (c == '0')
            f.status.push_back(Fixed0);
        else if (c == '1')
            f.status.push_back(Fixed1);
        else
            throw Error(ErrorCode::SchemaError, "bad face name: " + s);
    }
    return f;
}

FormalChain face_boundary(const CubeFace& P) {
    if (P.degree() == 0) throw Error(ErrorCode::DegreeZero, P.name());
    FormalChain out;
    int j = 0; // 1-based index of the free axis, in ambient order
    for (int axis = 0; axis < P.ambient(); ++axis) {
        if (P.status[size_t(axis)] != CubeFace::Free) continue;
        ++j;
        const int sgn = (j % 2 == 0) ? 1 : -1; // (-1)^j
        CubeFace side1 = P, side0 = P;
        side1.status[size_t(axis)] = CubeFace::Fixed1;
        side0.status[size_t(axis)] = CubeFace::Fixed0;
        out.add(side1.gen(), sgn);
        out.add(side0.gen(), -sgn);
    }
    return out;
}

BoundarySpec cube_boundary_spec(int N) {
    BoundarySpec spec;
    // enumerate all 3^N faces
    std::vector<signed char> st(size_t(N), CubeFace::Free);
    long long total = 1;
    for (int i = 0; i < N; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        CubeFace f;
        for (int i = 0; i < N; ++i) {
            int digit = int(c % 3);
            c /= 3;
            f.status.push_back(digit == 0 ? CubeFace::Free
                               : digit == 1 ? CubeFace::Fixed0
                                            : CubeFace::Fixed1);
        }
        std::vector<std::pair<int, GeneratorId>> faces;
        if (f.degree() > 0) {
            FormalChain d = face_boundary(f);
            for (const auto& [g, coeff] : d.terms())
                faces.emplace_back(int(coeff), g);
        }
        spec.face_list[f.gen()] = std::move(faces);
    }
    return spec;
}

} // namespace mbh
