#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpsp {

enum class ErrorCode {
    NotPrime,
    TooSmall,
    TooLarge,
    ZeroInverse,
    BadParams,
    FieldMismatch,
    ZeroDivisor,
    ZeroDilation,
    ZeroInCodomain,
    ZeroInA,
    BadExponent,
    EmptySet,
    BadEpsilon,
    SizeCap,
    BadP,
    ConfigError,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fpsp
