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

#ifndef REGULA_STABLE_RING_HPP
#define REGULA_STABLE_RING_HPP

#include "regula/ratfunc.hpp"

#include <optional>
#include <vector>

namespace regula {

// The ring S of stable elements: rational functions that are proper
// (bounded at infinity) with all poles in the open left half plane.
// Imaginary-axis poles count as unstable.

enum class StabilityReason { ok, improper, unstable_denominator };

struct StabilityVerdict {
    bool stable = false;
    StabilityReason reason = StabilityReason::ok;
    /// Reduced denominator that failed the Hurwitz test, when that is the reason.
    std::optional<Poly> witness_den;
    /// Zero-based index of the first Routh row that breaks the criterion.
    std::optional<int> routh_row;
};

/**
 * Exact Routh-Hurwitz test: true iff every root of p lies in the open
 * left half plane. Nonzero constants are vacuously Hurwitz. Any zero or
 * sign change in the first column, and any degenerate (premature zero)
 * row, yields false. Throws std::invalid_argument on the zero polynomial.
 */
bool is_hurwitz(const Poly& p);

/// As is_hurwitz, but also reports the zero-based failing row index.
std::pair<bool, std::optional<int>> is_hurwitz_detail(const Poly& p);

/// Membership of f in S. The zero function is stable.
StabilityVerdict in_S(const RatFunc& f);

/// True iff b/a lies in S. Throws on a = 0.
bool divides_in_S(const RatFunc& a, const RatFunc& b);

/// True iff both f and 1/f lie in S.
bool is_unit_in_S(const RatFunc& f);

/**
 * A gcd representative of a, b in S (inputs must lie in S, not both
 * zero). The result divides both, and the quotient pair generates the
 * unit ideal: no common closed-RHP zero and at least one quotient
 * biproper. Unique up to a unit of S; compare results with
 * is_unit_in_S of the quotient, not structural equality.
 */
RatFunc gcd_in_S(const RatFunc& a, const RatFunc& b);

struct BezoutWitness {
    RatFunc x, y, g; // x*a + y*b = g, all of x, y, g in S
};

/**
 * Bezout identity in S: finds x, y in S with x*a + y*b = g where g is a
 * gcd representative, normalized to exactly 1 when the gcd is a unit.
 * Self-certifying: the identity and the S-membership of the witnesses
 * are re-verified before returning.
 */
BezoutWitness bezout_in_S(const RatFunc& a, const RatFunc& b);

/**
 * True iff the polynomials share a zero in the closed right half plane,
 * decided as: gcd over Q[s] nonconstant and not Hurwitz. Inputs must be
 * nonzero; throws on an empty list.
 */
bool has_common_unstable_zero(const std::vector<Poly>& ps);

} // namespace regula

#endif // REGULA_STABLE_RING_HPP
