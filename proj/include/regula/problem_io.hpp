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

#ifndef REGULA_PROBLEM_IO_HPP
#define REGULA_PROBLEM_IO_HPP

#include "regula/jsonio.hpp"
#include "regula/regulation.hpp"

namespace regula {

struct ProblemFile {
    RegulationProblem problem;
    std::string name; // metadata.name when present
};

/**
 * Problem file schema (format 1):
 *   { "format": 1, "metadata": {"name": ...}?, "plant": [[...]],
 *     "controller": [[...]], "generator": [[...]],
 *     "disturbance_shaping": [[...]]? }
 * Matrix entries are expression strings or {num, den} coefficient objects.
 */
ProblemFile problem_from_json(const Json& j);

/// RCF file schema: { "format": 1, "N": [[...]], "D": [[...]], "X"?, "Y"? }.
RcfData rcf_from_json(const Json& j);

/// Serialized internal-model certificate; embeds everything the
/// independent checker needs (theta, controller, A, B).
Json imp_certificate_to_json(const ImpCertificate& cert, const RatMat& controller);

/// Serialized scalar coprime factorization certificate (g, N, D, x, y).
Json scf_certificate_to_json(const ScalarCoprimeFactorization& f);

} // namespace regula

#endif // REGULA_PROBLEM_IO_HPP
