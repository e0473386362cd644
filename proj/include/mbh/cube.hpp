#pragma once

#include "mbh/chains.hpp"

#include <string>
#include <vector>

namespace mbh {

// A face of I^N: each ambient axis is free or pinned to one of the two sides.
// The orientation of a face is the one induced by listing its free axes in
// ambient order.
struct CubeFace {
    enum Status : signed char { Free = -1, Fixed0 = 0, Fixed1 = 1 };
    std::vector<signed char> status; // one entry per ambient axis

    int ambient() const { return int(status.size()); }
    int degree() const {
        int p = 0;
        for (signed char s : status)
            if (s == Free) ++p;
        return p;
    }
    // e.g. "*01" = free in axis 0, pinned to 0 in axis 1, pinned to 1 in axis 2
    std::string name() const {
        std::string s;
        for (signed char st : status)
            s += (st == Free) ? '*' : (st == Fixed0 ? '0' : '1');
        return s;
    }
    GeneratorId gen() const { return {name(), degree(), GenKind::CubeFaceGen}; }

    static CubeFace from_name(const std::string& s);
    auto operator<=>(const CubeFace&) const = default;
};

// Alternating sum of the 2p codimension-one faces: the j-th free axis (1-based
// in ambient order) contributes (-1)^j times [pin to 1] minus [pin to 0].
// Throws DegreeZero on vertices.
FormalChain face_boundary(const CubeFace& P);

// Boundary spec covering every face of I^N (3^N generators).
BoundarySpec cube_boundary_spec(int N);

} // namespace mbh
