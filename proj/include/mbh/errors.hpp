#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mbh {

// Error categories used across the library.  Each carries a short machine
// parsable token (the enum name) as the first word of what().
enum class ErrorCode {
    CompositionNotZero,
    NotAChainMap,
    UnknownGenerator,
    DegreeZero,
    NotChainLevel,
    NegativeDegree,
    BaseMismatch,
    StrataMismatch,
    DSquaredViolation,
    NoFundamentalChain,
    SchemaError,
    ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Collected diagnostics from a validator.  Validators never throw for
// mathematical violations; they accumulate human-readable messages here.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(const std::string& msg) { violations.push_back(msg); }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(),
                          other.violations.end());
    }
    std::string to_string() const;
};

} // namespace mbh
