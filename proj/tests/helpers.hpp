#pragma once
// Small cubulations shared across the test binaries.

#include "mbh/cubulation.hpp"

namespace helpers {

using mbh::CellChain;
using mbh::Cubulation;
using mbh::Int;

inline Cubulation point(const std::string& id = "pt") {
    Cubulation K;
    K.add_cell(id, 0);
    CellChain f;
    mbh::chain_add(f, 0, 1);
    K.fundamental = f;
    return K;
}

// Interval with two vertices; fundamental chain = the edge (not a cycle).
inline Cubulation interval(const std::string& v0 = "i0", const std::string& v1 = "i1",
                           const std::string& e = "ie") {
    Cubulation K;
    K.add_cell(v0, 0);
    K.add_cell(v1, 0);
    int ec = K.add_cell(e, 1);
    K.add_boundary(ec, 1, 0, 0, v0);
    K.add_boundary(ec, -1, 0, 1, v1);
    CellChain f;
    mbh::chain_add(f, ec, 1);
    K.fundamental = f;
    return K;
}

// Circle with two vertices and two edges, fundamental cycle e0 + e1.
inline Cubulation circle(const std::string& v0 = "v0", const std::string& v1 = "v1",
                         const std::string& e0 = "e0", const std::string& e1 = "e1") {
    Cubulation K;
    K.add_cell(v0, 0);
    K.add_cell(v1, 0);
    int a = K.add_cell(e0, 1);
    K.add_boundary(a, 1, 0, 0, v0);
    K.add_boundary(a, -1, 0, 1, v1);
    int b = K.add_cell(e1, 1);
    K.add_boundary(b, 1, 0, 0, v1);
    K.add_boundary(b, -1, 0, 1, v0);
    CellChain f;
    mbh::chain_add(f, a, 1);
    mbh::chain_add(f, b, 1);
    K.fundamental = f;
    return K;
}

// Two squares glued along a common square boundary ("pillow" 2-sphere).
inline Cubulation pillow() {
    Cubulation K;
    K.add_cell("a", 0);
    K.add_cell("b", 0);
    K.add_cell("c", 0);
    K.add_cell("d", 0);
    auto edge = [&](const std::string& id, const std::string& from,
                    const std::string& to) {
        int e = K.add_cell(id, 1);
        K.add_boundary(e, 1, 0, 0, from);
        K.add_boundary(e, -1, 0, 1, to);
    };
    edge("left", "a", "b");
    edge("right", "c", "d");
    edge("bottom", "a", "c");
    edge("top", "b", "d");
    auto square = [&](const std::string& id) {
        int s = K.add_cell(id, 2);
        K.add_boundary(s, 1, 0, 0, "left");
        K.add_boundary(s, -1, 0, 1, "right");
        K.add_boundary(s, -1, 1, 0, "bottom");
        K.add_boundary(s, 1, 1, 1, "top");
    };
    square("U");
    square("D");
    CellChain f;
    mbh::chain_add(f, K.find("U"), 1);
    mbh::chain_add(f, K.find("D"), -1);
    K.fundamental = f;
    return K;
}

inline int euler(const Cubulation& K) {
    int chi = 0;
    for (int i = 0; i < K.size(); ++i) chi += (K.cell(i).dim % 2 == 0) ? 1 : -1;
    return chi;
}

} // namespace helpers
