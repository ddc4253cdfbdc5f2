#pragma once

#include <optional>
#include <string>
#include <vector>

#include "younglab/serialize.hpp"

namespace younglab {

struct VerificationReport {
    std::string check_name;
    Json parameters = Json::object();
    std::vector<Json> counterexamples;
    double timing_ms = 0;  // reported on stderr only
    std::optional<Json> artifact;

    bool passed() const noexcept { return counterexamples.empty(); }
    std::string status() const { return passed() ? "pass" : "fail"; }
};

/// Deterministic payload: everything except the timing.
Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

/// One header line and one line per counterexample.
std::string to_tsv(const VerificationReport& report);
std::string to_ascii(const VerificationReport& report);

}  // namespace younglab
