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

#ifndef REGULA_CLOSED_LOOP_HPP
#define REGULA_CLOSED_LOOP_HPP

#include "regula/rat_mat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regula {

/// det(I - P*C) = 0: the feedback interconnection has no transfer matrix.
class ill_posed_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The chosen parameter matrix violates a determinant condition of the
/// closed-loop parametrization.
class degenerate_parametrization_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * The four blocks of the closed-loop map from (r, d) to (e, u) for the
 * plant P (n x m) and controller C (m x n):
 *
 *   e_from_r = (I - PC)^-1          e_from_d = (I - PC)^-1 P
 *   u_from_r = C (I - PC)^-1        u_from_d = (I - CP)^-1
 *
 * The loop is stable iff all four blocks have entries in S.
 */
struct ClosedLoopBlocks {
    RatMat e_from_r, e_from_d, u_from_r, u_from_d;
};

/// True iff det(I - P*C) != 0.
bool well_posed(const RatMat& P, const RatMat& C);

/// Computes the four blocks; throws ill_posed_error when det(I - PC) = 0.
ClosedLoopBlocks closed_loop(const RatMat& P, const RatMat& C);

struct BlockFailure {
    std::string block; // "e_from_r", "e_from_d", "u_from_r", "u_from_d"
    int row, col;      // zero-based
    StabilityVerdict verdict;
};

struct StabilizeReport {
    bool ok = false;
    bool well_posed = false;
    std::vector<BlockFailure> failures;
};

/// Stabilization test; ill-posedness is reported as a failure, not thrown.
StabilizeReport stabilizes(const RatMat& P, const RatMat& C);

/**
 * The parametrization data of a stabilizing pair:
 *
 *   Ltilde = [-(I-CP)^-1 C, (I-CP)^-1]   (m x (n+m))
 *   L      = [(I-PC)^-1; C (I-PC)^-1]    ((n+m) x n)
 *   Mtilde = [-(I-PC)^-1 P, (I-PC)^-1]   (n x (m+n))
 *   M      = [(I-CP)^-1; P (I-CP)^-1]    ((m+n) x m)
 *
 * All four are stable whenever C stabilizes P.
 */
struct ParamData {
    RatMat L, Ltilde, M, Mtilde;
};

/// Throws std::invalid_argument when C does not stabilize P.
ParamData param_data(const RatMat& P, const RatMat& C);

/**
 * The plant family stabilized by C:
 *   P(X) = (P (I-CP)^-1 + Mtilde X M) ((I-CP)^-1 + C Mtilde X M)^-1
 * for stable X of size (m+n) x (m+n) with both determinant conditions
 * nonzero. P(0) = P. Throws degenerate_parametrization_error when a
 * determinant condition fails and std::invalid_argument for unstable X.
 */
RatMat plant_param(const RatMat& P, const RatMat& C, const RatMat& X);

/**
 * The controller family stabilizing P:
 *   C(W) = (C (I-PC)^-1 + Ltilde W L) ((I-PC)^-1 + P Ltilde W L)^-1
 * for stable W of size (n+m) x (n+m) with both determinant conditions
 * nonzero. C(0) = C.
 */
RatMat controller_param(const RatMat& P, const RatMat& C, const RatMat& W);

/**
 * Deterministic stable test matrix: every entry is n(s)/d(s) with random
 * integer numerator coefficients in [-9, 9], deg n <= max_degree, and d a
 * product of max_degree factors (s + a), a in {1, ..., 10}. Entries pass
 * in_S by construction; identical arguments give identical results.
 */
RatMat sample_stable_matrix(int rows, int cols, int max_degree, uint64_t seed);

} // namespace regula

#endif // REGULA_CLOSED_LOOP_HPP
