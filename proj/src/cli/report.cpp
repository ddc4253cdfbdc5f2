#include "younglab/report.hpp"

#include <sstream>

namespace younglab {

Json to_json(const VerificationReport& report) {
    Json j{{"check", report.check_name},
           {"status", report.status()},
           {"parameters", report.parameters},
           {"counterexamples", report.counterexamples}};
    if (report.artifact) j["artifact"] = *report.artifact;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.check_name = j.at("check").get<std::string>();
    r.parameters = j.at("parameters");
    for (const Json& c : j.at("counterexamples")) r.counterexamples.push_back(c);
    if (j.contains("artifact")) r.artifact = j.at("artifact");
    return r;
}

std::string to_tsv(const VerificationReport& report) {
    std::ostringstream out;
    out << "check\tstatus\tparameters\tcounterexamples\n";
    out << report.check_name << '\t' << report.status() << '\t' << report.parameters.dump() << '\t'
        << report.counterexamples.size() << '\n';
    for (const Json& c : report.counterexamples) out << "counterexample\t" << c.dump() << '\n';
    return out.str();
}

std::string to_ascii(const VerificationReport& report) {
    std::ostringstream out;
    out << report.check_name << ": " << report.status();
    for (const auto& [key, value] : report.parameters.items()) out << "  " << key << '=' << value.dump();
    out << '\n';
    for (const Json& c : report.counterexamples) out << "  counterexample " << c.dump() << '\n';
    return out.str();
}

}  // namespace younglab
