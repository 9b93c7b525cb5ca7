#pragma once

#include <stdexcept>
#include <string>

namespace fgsym {

enum class Errc {
    LengthMismatch,
    NonPositivePotential,
    DuplicateArgument,
    InvalidAssignment,
    InvalidSubset,
    InvalidPermutation,
    MixedRanges,
    NotCommutative,
    SubsetTooSmall,
    ArityLimitExceeded,
    InvalidK,
    TableTooLarge,
    BadInput,
};

class FgError : public std::runtime_error {
public:
    FgError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace fgsym
