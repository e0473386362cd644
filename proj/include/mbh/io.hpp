#pragma once

#include "mbh/continuation.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mbh {

// Document parsing.  SchemaError = the text is malformed or references are
// dangling; ValidationError = well-formed but mathematically inconsistent
// data (the full report is in the message).
FlowCategory parse_flow_category(const std::string& json_text);
FlowCategory load_flow_category(const std::string& path);

std::string serialize_flow_category(const FlowCategory& fc);

// The continuation document names its endpoints; they must match the two
// already-loaded categories (SchemaError otherwise).
ContinuationData parse_continuation(const std::string& json_text,
                                    const FlowCategory& source,
                                    const FlowCategory& target);
ContinuationData load_continuation(const std::string& path,
                                   const FlowCategory& source,
                                   const FlowCategory& target);

// A homotopy document references four category files, four continuation
// files, and carries the homotopy bundles inline.  Referenced paths are
// resolved relative to the document.
struct LoadedHomotopy {
    std::unique_ptr<FlowCategory> f1, f2, f3, f4;
    std::unique_ptr<ContinuationData> F21, F31, F42, F43;
    HomotopyData data; // pointers into the fields above
};
std::unique_ptr<LoadedHomotopy> load_homotopy(const std::string& path);

// Boundary matrices with their generator labels, for external inspection.
std::string serialize_boundary_matrices(const MorseBottComplex& mc);

// Path resolution: an existing path wins; otherwise the file is looked up in
// $MBHOM_FIXTURES, then in the compiled-in fixture directory.
std::string resolve_input_path(const std::string& path);

} // namespace mbh
