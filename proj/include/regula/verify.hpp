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

#ifndef REGULA_VERIFY_HPP
#define REGULA_VERIFY_HPP

#include "regula/jsonio.hpp"

#include <string>
#include <vector>

namespace regula {

// Independent certificate checker. It rebuilds every claimed identity
// from the serialized data using only scalar/matrix arithmetic and
// S-membership tests; none of the verdict machinery that produced the
// certificate is involved.

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> checked; // one line per verified certificate
    std::string reason;               // first failure, when !ok
};

/**
 * Verify one certificate object, or every certificate embedded in a
 * report (any object with a "certificates" array). Supported kinds:
 *
 *   "imp":            stable A, B with theta*I = A + B*controller
 *   "scalar_coprime": N, D, x, y in S, D != 0, g = N/D, x*N + y*D = 1
 *
 * Malformed documents raise input_error; a well-formed certificate that
 * fails its identity yields ok = false.
 */
VerifyResult verify_certificate_json(const Json& doc);

} // namespace regula

#endif // REGULA_VERIFY_HPP
