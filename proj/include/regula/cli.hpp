/*
   Copyright 2026 The regula authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef REGULA_CLI_HPP
#define REGULA_CLI_HPP

#include "regula/jsonio.hpp"

#include <string>
#include <vector>

namespace regula {

/**
 * Outcome of one CLI invocation.
 *
 * Exit codes: 0 verdict true / verified, 1 verdict false, 2 input error,
 * 3 internal verification defect.
 */
struct RunResult {
    int exit_code = 0;
    std::string text; // human-readable output
    Json report;      // machine-readable document (empty on input errors)
};

/**
 * Run one command, given argv without the program name, e.g.
 * {"check", "imp", "--fixture", "quadtank"}. Reports are deterministic
 * byte-for-byte for identical arguments and inputs. When --json <path>
 * is given the report is also written there.
 */
RunResult run_command(const std::vector<std::string>& args);

} // namespace regula

#endif // REGULA_CLI_HPP
