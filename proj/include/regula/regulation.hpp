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

#ifndef REGULA_REGULATION_HPP
#define REGULA_REGULATION_HPP

#include "regula/closed_loop.hpp"
#include "regula/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regula {

/**
 * A regulation problem instance: plant P (n x m), controller C (m x n),
 * signal generator Gr (n x q), and optional disturbance shaping Q (n x n)
 * with Gd = Q * Gr. Q defaults to the identity.
 */
struct RegulationProblem {
    RatMat P, C, Gr;
    std::optional<RatMat> Q;
};

/// Throws std::invalid_argument when the dimensions are inconsistent.
void validate_problem(const RegulationProblem& prob);

/**
 * An internal-model certificate: stable matrices A (n x n) and B (n x m)
 * with theta * I = A + B * C, witnessing that the instability of theta is
 * reproduced inside the controller. Re-verifiable with no access to the
 * computation that produced it.
 */
struct ImpCertificate {
    std::string label; // "theta_1_2" (1-based entry), "generator", "classical"
    RatFunc theta;
    RatMat A, B;
};

struct ImpEntryFailure {
    int row, col;      // zero-based entry of Gr; (-1, -1) for generator-level checks
    std::string block; // "theta*(I-PC)^-1" or "theta*(I-PC)^-1*P"
    StabilityVerdict verdict;
};

struct ImpReport {
    bool ok = false;
    StabilizeReport stab;
    std::vector<ImpCertificate> certificates;
    std::vector<ImpEntryFailure> failures;
};

struct ImpGenReport {
    bool ok = false;
    StabilizeReport stab;
    RatFunc generator;
    std::optional<ImpCertificate> certificate;
    std::vector<ImpEntryFailure> failures;
};

/// Right coprime factorization data for the controller: C = N * D^-1 with
/// X * N + Y * D = I. X, Y may be omitted and constructed when P is stable.
struct RcfData {
    RatMat N, D;
    std::optional<RatMat> X, Y;
};

struct ClassicalReport {
    bool ok = false; // stabilizes plus both d^-1 stability conditions
    StabilizeReport stab;
    RatFunc d; // internal model element
    std::optional<ImpCertificate> certificate;
    std::vector<ImpEntryFailure> failures;
    // RCF section, present when an RCF was supplied
    bool rcf_supplied = false;
    bool rcf_verified = false;
    std::string rcf_error;
    std::optional<RatMat> rcf_X, rcf_Y;
    std::optional<bool> divisibility_ok; // every entry of D divisible by d in S
    std::optional<RatMat> D0;            // d^-1 * D when divisibility holds
};

/// True iff (I-PC)^-1 * Gr is stable. Throws ill_posed_error.
bool is_regulating(const RegulationProblem& prob);

/// True iff (I-PC)^-1 * P * Q * Gr is stable (Q defaults to I).
bool is_disturbance_rejecting(const RegulationProblem& prob);

/**
 * Internal model principle, entrywise: C solves the robust regulation
 * problem iff it stabilizes P and every entry theta of Gr admits stable
 * A, B with theta*I = A + B*C. On success the certificates take the
 * closed forms A = theta*(I-PC)^-1, B = -theta*(I-PC)^-1*P and are
 * re-verified structurally before returning.
 */
ImpReport imp_check(const RegulationProblem& prob);

/// Same verdict, decided on the single ideal generator of the Gr entries.
ImpGenReport imp_check_via_generator(const RegulationProblem& prob);

/**
 * Classical divisibility form: with d the internal model element of the
 * Gr entries, checks the d^-1 conditions, and, when an RCF of C is
 * supplied (or constructible via rcf_bezout_for_stable_plant), verifies
 * the RCF and checks that d divides every entry of its D with
 * D0 = d^-1 * D stable.
 */
ClassicalReport imp_check_classical(const RegulationProblem& prob,
                                    const std::optional<RcfData>& rcf);

/// The Bezout-witness construction X = -(D-PN)^-1 P, Y = (D-PN)^-1 does
/// not apply (unstable plant, singular D-PN, or unstable witnesses).
class rcf_construction_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Bezout witnesses for a right factorization C = N * D^-1 of a controller
 * stabilizing a stable plant P: X = -(D-PN)^-1 * P, Y = (D-PN)^-1.
 * Returns only if both are stable and X*N + Y*D = I structurally;
 * otherwise throws rcf_construction_error.
 */
std::pair<RatMat, RatMat> rcf_bezout_for_stable_plant(const RatMat& P, const RatMat& N,
                                                      const RatMat& D);

struct ProbeViolation {
    int sample;        // zero-based sample index
    std::string stage; // "stabilizes", "regulating", "rejecting"
};

struct ProbeReport {
    int requested = 0;
    int checked = 0;
    int degenerate_skips = 0;
    bool imp_ok = false; // nominal imp_check verdict
    // Regulation outcomes are always tallied; they only count as
    // violations when the nominal imp verdict promised robustness.
    int regulating_failures = 0;
    int rejecting_failures = 0;
    std::vector<ProbeViolation> violations;
};

/**
 * Empirical exercise of robust regulation over the stabilized-plant
 * family: for `samples` seeded stable X (degenerate parameter choices
 * skipped and counted), asserts stabilizes(P(X), C) and evaluates
 * regulation and disturbance rejection for P(X). When the nominal
 * imp_check holds, any regulation failure is a violation; an
 * IMP-certified controller must produce none. When it does not hold,
 * the tallied failures are the expected evidence of non-robustness.
 */
ProbeReport robustness_probe(const RegulationProblem& prob, int samples, int max_degree,
                             uint64_t seed);

} // namespace regula

#endif // REGULA_REGULATION_HPP
