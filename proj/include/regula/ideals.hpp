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

#ifndef REGULA_IDEALS_HPP
#define REGULA_IDEALS_HPP

#include "regula/stable_ring.hpp"

#include <vector>

namespace regula {

// Fractional ideals of the fraction field over S. S here is a principal
// ideal domain, so every finitely generated fractional ideal has a single
// generator, unique up to a unit of S.

/**
 * A generator g of the fractional ideal spanned by gens: every f_i/g lies
 * in S and the quotients f_i/g generate the unit ideal (no common
 * closed-RHP zero, at least one biproper). Both properties are verified
 * before returning; a failure raises internal_defect_error since the
 * construction guarantees them.
 *
 * Throws std::invalid_argument unless at least one generator is nonzero.
 */
RatFunc ideal_generator(const std::vector<RatFunc>& gens);

/// f in <g>, i.e. f/g in S. Throws on g = 0; true for f = 0.
bool ideal_membership(const RatFunc& f, const RatFunc& g);

/// Equality of the two spanned ideals, decided on generators up to unit.
bool ideal_equal(const std::vector<RatFunc>& gens_a, const std::vector<RatFunc>& gens_b);

/**
 * Coprime factorization of a scalar g over S: g = N/D with N, D in S and
 * Bezout witnesses x, y in S, x*N + y*D = 1 exactly.
 */
struct ScalarCoprimeFactorization {
    RatFunc g, N, D, x, y;
};

/// Throws std::domain_error on g = 0. All five invariants are re-verified
/// before returning.
ScalarCoprimeFactorization scalar_coprime_factorization(const RatFunc& g);

/**
 * The minimal internal model of the signals spanned by gens: the stable
 * denominator D of the coprime factorization of the ideal generator.
 * Unique up to a unit of S; a unit itself when every generator is stable.
 */
RatFunc internal_model_element(const std::vector<RatFunc>& gens);

} // namespace regula

#endif // REGULA_IDEALS_HPP
