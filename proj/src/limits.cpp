#include "younglab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "younglab/errors.hpp"

namespace younglab {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::InvalidPartition: return "InvalidPartition";
        case Errc::MismatchedSize: return "MismatchedSize";
        case Errc::EmptyPartition: return "EmptyPartition";
        case Errc::InvalidTableau: return "InvalidTableau";
        case Errc::InvalidFilling: return "InvalidFilling";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::OrthogonalizationFailure: return "OrthogonalizationFailure";
        case Errc::LimitExceeded: return "LimitExceeded";
    }
    return "Unknown";
}

Limits limits_from_env() {
    Limits limits;
    const char* raw = std::getenv("YOUNGLAB_MAX_N");
    if (raw == nullptr) return limits;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 0) return limits;
    limits.combinatorics = value;
    limits.characters = value;
    limits.forms = value;
    return limits;
}

void check_limit(int n, int cap, std::string_view what) {
    if (n > cap) {
        throw Error(Errc::LimitExceeded, std::string(what) + ": n = " + std::to_string(n) +
                                             " exceeds the configured maximum " +
                                             std::to_string(cap));
    }
}

}  // namespace younglab
