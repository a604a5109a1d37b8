// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qboson::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to the --output file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Grid parsing for `scan`: "a:b" (step 1), "a:b:step", "x,y,z" or a
/// single value. Ranges are inclusive; b < a gives an empty grid.
std::vector<int> parse_int_grid(const std::string& spec);
std::vector<double> parse_real_grid(const std::string& spec);

}  // namespace qboson::cli
