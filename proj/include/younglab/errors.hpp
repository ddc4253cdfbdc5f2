#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace younglab {

enum class Errc {
    InvalidPartition,
    MismatchedSize,
    EmptyPartition,
    InvalidTableau,
    InvalidFilling,
    DegreeMismatch,
    DimensionMismatch,
    NotInvariant,
    OrthogonalizationFailure,
    LimitExceeded,
};

std::string_view to_string(Errc code);

// All library failures are reported through this type; `code()` is stable
// and is what the CLI serializes.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace younglab
