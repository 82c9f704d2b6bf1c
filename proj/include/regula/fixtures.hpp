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

#ifndef REGULA_FIXTURES_HPP
#define REGULA_FIXTURES_HPP

#include <string>
#include <vector>

namespace regula {

// Built-in problem fixtures, byte-identical to the JSON files shipped
// under fixtures/. "quadtank" is the two-input two-output quadruple-tank
// laboratory process with a multivariable controller whose poles at
// 0 and +-i reproduce the generator dynamics; "quadtank-typo" is the
// same problem with generator entry (1,2) changed to -1/(s^2-1), whose
// pole at s = 1 the controller does not reproduce. The typo variant is
// a negative control and must fail the internal-model checks.

/// JSON text of a built-in problem fixture, or nullptr when unknown.
const char* builtin_fixture_json(const std::string& name);

/// JSON text of the built-in controller RCF for "quadtank", else nullptr.
const char* builtin_rcf_json(const std::string& name);

std::vector<std::string> builtin_fixture_names();

} // namespace regula

#endif // REGULA_FIXTURES_HPP
