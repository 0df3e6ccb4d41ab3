#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "transvect/experiments.hpp"

namespace transvect {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct CliResult {
    int exit_code = kExitUsage;
    std::optional<RunReport> report;
};

// args excludes the program name. The report goes to --out, else to `out`; diagnostics to `err`.
CliResult run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transvect
