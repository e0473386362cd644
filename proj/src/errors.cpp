#include "mbh/errors.hpp"

namespace mbh {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::CompositionNotZero: return "CompositionNotZero";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotChainLevel: return "NotChainLevel";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::StrataMismatch: return "StrataMismatch";
    case ErrorCode::DSquaredViolation: return "DSquaredViolation";
    case ErrorCode::NoFundamentalChain: return "NoFundamentalChain";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        out += v;
        out += '\n';
    }
    return out;
}

} // namespace mbh
