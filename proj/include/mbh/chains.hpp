#pragma once

#include "mbh/errors.hpp"
#include "mbh/int_matrix.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mbh {

// Provenance tag for a generator.  Downstream normalization rules treat cube
// faces and fibered-product components differently, so the kind travels with
// the id.
enum class GenKind {
    CubeFaceGen,
    Cell,
    ModuliComponent,
    FiberedProductComponent,
};

struct GeneratorId {
    std::string name;
    int degree = 0;
    GenKind kind = GenKind::Cell;

    auto operator<=>(const GeneratorId&) const = default;
};

// Finite integer combination of generators of one common degree.  The zero
// chain has no terms and is a valid chain of every degree.
class FormalChain {
public:
    FormalChain() = default;

    void add(const GeneratorId& g, const Int& coeff);
    bool is_zero() const { return terms_.empty(); }
    // Degree of the stored terms; -1 for the zero chain.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }
    const std::map<GeneratorId, Int>& terms() const { return terms_; }

    FormalChain& operator+=(const FormalChain& o);
    FormalChain operator*(const Int& k) const;
    bool operator==(const FormalChain& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<GeneratorId, Int> terms_;
};

// Face lists with ±1 coefficients, one entry per generator.
struct BoundarySpec {
    std::map<GeneratorId, std::vector<std::pair<int, GeneratorId>>> face_list;
};

// Linear extension of the face lists.  Degree-0 generators map to zero even
// without an entry; otherwise a missing entry raises UnknownGenerator.
FormalChain chain_boundary(const FormalChain& c, const BoundarySpec& b);

// Diagnoses wrong face degrees, non-unit coefficients, and generators whose
// second boundary fails to vanish.
ValidationReport validate_boundary_spec(const BoundarySpec& b);

} // namespace mbh
