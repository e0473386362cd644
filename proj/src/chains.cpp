#include "mbh/chains.hpp"

namespace mbh {

void FormalChain::add(const GeneratorId& g, const Int& coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && g.degree != degree())
        throw Error(ErrorCode::ValidationError,
                    "mixed degrees in one chain: " + g.name);
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalChain& FormalChain::operator+=(const FormalChain& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

FormalChain FormalChain::operator*(const Int& k) const {
    FormalChain r;
    if (k == 0) return r;
    for (const auto& [g, c] : terms_) r.add(g, c * k);
    return r;
}

std::string FormalChain::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + g.name;
    }
    return s;
}

FormalChain chain_boundary(const FormalChain& c, const BoundarySpec& b) {
    FormalChain out;
    for (const auto& [g, coeff] : c.terms()) {
        auto it = b.face_list.find(g);
        if (it == b.face_list.end()) {
            if (g.degree == 0) continue;
            throw Error(ErrorCode::UnknownGenerator, g.name);
        }
        for (const auto& [sign, face] : it->second) out.add(face, coeff * Int(sign));
    }
    return out;
}

ValidationReport validate_boundary_spec(const BoundarySpec& b) {
    ValidationReport rep;
    for (const auto& [g, faces] : b.face_list) {
        for (const auto& [sign, face] : faces) {
            if (sign != 1 && sign != -1)
                rep.add("coefficient not ±1 on boundary of " + g.name);
            if (face.degree != g.degree - 1)
                rep.add("face " + face.name + " of " + g.name +
                        " has degree " + std::to_string(face.degree) +
                        ", expected " + std::to_string(g.degree - 1));
        }
    }
    if (!rep.ok()) return rep;
    for (const auto& [g, faces] : b.face_list) {
        (void)faces;
        FormalChain c;
        c.add(g, 1);
        try {
            FormalChain dd = chain_boundary(chain_boundary(c, b), b);
            if (!dd.is_zero())
                rep.add("second boundary of " + g.name +
                        " is nonzero: " + dd.to_string());
        } catch (const Error& e) {
            rep.add(std::string("boundary of ") + g.name +
                    " references an unregistered generator: " + e.what());
        }
    }
    return rep;
}

} // namespace mbh
