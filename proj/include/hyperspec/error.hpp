#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class Errc {
    DivisionByZero,
    DuplicateAbscissa,
    BadPrime,
    InsufficientModuli,
    DimMismatch,
    NotHomogeneous,
    NotSquare,
    DegenerateMinor,
    DegreeCapExceeded,
    TooManyDegeneratePoints,
    ZeroVector,
    BadSetSize,
    BadSize,
    BadPartition,
    CapExceeded,
    OddV1,
    ConditionAViolated,
    ConditionBViolated,
    Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hyperspec
