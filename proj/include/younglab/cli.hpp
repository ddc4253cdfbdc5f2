#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace younglab::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Payloads go to `out`
/// (or to --out), errors and timings to `err` as JSON lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace younglab::cli
