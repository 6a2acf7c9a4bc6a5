#pragma once

#include <stdexcept>
#include <string>

namespace shiftcover {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCode {
    verification = 1,   // a computed certificate failed its own check
    validation = 2,     // malformed or out-of-contract input
    not_applicable = 3, // operation does not apply to this input class
    infeasible = 4,     // horizon exhausted, overflow, or stage infeasible
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorCode::validation, what) {}
};

struct NotApplicableError : Error {
    explicit NotApplicableError(const std::string& what) : Error(ErrorCode::not_applicable, what) {}
};

struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& what) : Error(ErrorCode::infeasible, what) {}
};

struct VerificationError : Error {
    explicit VerificationError(const std::string& what) : Error(ErrorCode::verification, what) {}
};

} // namespace shiftcover
