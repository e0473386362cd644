#pragma once

#include "mbh/fibered.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mbh {

// One closed oriented component of a critical level.
struct LevelComponent {
    std::string id;
    int dim = 0;
    Cubulation complex; // must carry a fundamental chain
};

struct CriticalLevel {
    int index = 0;
    std::vector<LevelComponent> components;
    // Disjoint union of the component complexes; cell ids must be unique
    // across the whole level.  This is the chain group the boundary operators
    // land in.
    Cubulation combined;
    std::vector<int> component_of; // per combined cell: component position

    void finalize(); // builds combined/component_of
    int total_dim() const;
};

// Label attaching a fiber-boundary cell to the fibered product of two deeper
// moduli spaces through an intermediate level.
struct StratumLabel {
    std::string fiber_boundary_cell;
    int via_index = 0;
    std::string left_cell;
    std::string right_cell;
    // For continuation bundles: +1 = (source moduli) x (continuation),
    // -1 = (continuation) x (target moduli).  Unused (0) for internal moduli.
    int family = 0;
};

// One trivial piece of a moduli bundle together with its endpoint data.
struct ModuliPiece {
    TrivialBundlePiece bundle;
    // images of total-complex cells ("basecell*fibercell") in the target
    // level, by cell id
    std::map<std::string, std::vector<std::pair<Int, std::string>>> endpoint_images;
    std::vector<StratumLabel> strata;

    // computed on finalize
    Cubulation total; // base component complex x fiber
    std::shared_ptr<CellularChainMap> endpoint; // total -> target level combined
};

struct ModuliBundle {
    int from = 0, to = 0;
    std::vector<ModuliPiece> pieces;
};

struct FlowCategory {
    std::string name;
    int m = 0;
    std::map<int, CriticalLevel> levels;
    std::vector<ModuliBundle> moduli;

    const CriticalLevel* level(int i) const;
    const LevelComponent* component(int i, const std::string& id) const;
    const ModuliBundle* bundle(int from, int to) const;
    bool empty() const { return levels.empty(); }

    // Builds totals and endpoint chain maps; throws NotChainLevel /
    // SchemaError on inconsistent endpoint data.
    void finalize();
};

ValidationReport validate_weak_self_indexing(const FlowCategory& fc);
// Each internal piece's fiber must have degree j - 1 (total j + b_i - 1).
ValidationReport validate_degrees(const FlowCategory& fc);

// The stratified boundary of the (i, i-j) moduli data as a formal chain whose
// generators name the intermediate fibered products.  Throws StrataMismatch
// when a fiber-boundary cell lacks a consistent label.
FormalChain moduli_boundary(const FlowCategory& fc, int i, int j);

// Checks stratum label consistency everywhere plus the formal two-sum
// cancellation of the second boundary over the occupied index range.
ValidationReport validate_moduli_d_squared(const FlowCategory& fc);

ValidationReport validate_flow_category(const FlowCategory& fc);

} // namespace mbh
