#ifndef WCOUNT_ERROR_HPP
#define WCOUNT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wcount {

/// Failure categories surfaced by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
    InvalidInput,
    EnumerationLimitExceeded,
    GammaNotGreaterThanOne,
    InfeasibleWitness,
    IncompatibleInputs,
    AllWeightsZero,
    DivisionByZero,
    ZeroWeightOnMatching,
    NotAHomomorphism,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace wcount

#endif
