#pragma once

#include <string>

#include "dlt/config.hpp"

namespace dlt {

// Executes the configured command. Returns the process exit code:
// 0 = success / all suites passed, 1 = a suite failed its tolerance.
// Invalid input is reported by throwing (the CLI maps it to exit code 2).
int run_command(const RunConfig& config);

std::string report_to_text(const VerificationReport& report);

std::string format_g17(double v);

}  // namespace dlt
