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

#ifndef REGULA_JSONIO_HPP
#define REGULA_JSONIO_HPP

#include "regula/rat_mat.hpp"

#include <json.hpp>

#include <string>

namespace regula {

/// Insertion-ordered JSON keeps report output deterministic and readable.
using Json = nlohmann::ordered_json;

/// Malformed input file, expression, or schema violation. CLI exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rational functions serialize as {"num": [c0, c1, ...], "den": [...]}
// with ascending coefficients, each an integer (when it fits) or a "p/q"
// string. Readers also accept a grammar expression string anywhere a
// rational function is expected.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json mat_to_json(const RatMat& m);
RatMat mat_from_json(const Json& j);

/// Witness serialization for stability failures.
Json verdict_to_json(const StabilityVerdict& v);

/// FNV-1a 64-bit digest, rendered as "fnv1a:<16 hex digits>".
std::string fnv1a_hex(const std::string& bytes);

/// Parse a JSON document; wraps syntax errors in input_error.
Json parse_json_text(const std::string& text, const std::string& what);

/// Read a whole file; throws input_error when unreadable.
std::string read_file(const std::string& path);

} // namespace regula

#endif // REGULA_JSONIO_HPP
