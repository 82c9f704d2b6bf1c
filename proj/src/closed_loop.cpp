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

#include "regula/closed_loop.hpp"

#include "regula/rng.hpp"

namespace regula {

namespace {

void check_loop_dims(const RatMat& P, const RatMat& C) {
    if (P.cols() != C.rows() || C.cols() != P.rows())
        throw std::invalid_argument("closed loop: plant is n x m, controller must be m x n");
}

void collect_failures(const char* name, const RatMat& m, std::vector<BlockFailure>& out) {
    MatStability st = mat_is_stable(m);
    for (auto& f : st.failures) out.push_back({name, f.row, f.col, std::move(f.verdict)});
}

} // namespace

bool well_posed(const RatMat& P, const RatMat& C) {
    check_loop_dims(P, C);
    const RatMat ImPC = RatMat::identity(P.rows()) - P * C;
    return !ImPC.det().is_zero();
}

ClosedLoopBlocks closed_loop(const RatMat& P, const RatMat& C) {
    check_loop_dims(P, C);
    const int n = P.rows(), m = P.cols();
    const RatMat ImPC = RatMat::identity(n) - P * C;
    if (ImPC.det().is_zero())
        throw ill_posed_error("closed_loop: det(I - PC) = 0, interconnection ill-posed");
    const RatMat ipc = ImPC.inverse();
    const RatMat icp = (RatMat::identity(m) - C * P).inverse();
    return {ipc, ipc * P, C * ipc, icp};
}

StabilizeReport stabilizes(const RatMat& P, const RatMat& C) {
    check_loop_dims(P, C);
    StabilizeReport rep;
    rep.well_posed = well_posed(P, C);
    if (!rep.well_posed) {
        rep.ok = false;
        return rep;
    }
    const ClosedLoopBlocks blocks = closed_loop(P, C);
    collect_failures("e_from_r", blocks.e_from_r, rep.failures);
    collect_failures("e_from_d", blocks.e_from_d, rep.failures);
    collect_failures("u_from_r", blocks.u_from_r, rep.failures);
    collect_failures("u_from_d", blocks.u_from_d, rep.failures);
    rep.ok = rep.failures.empty();
    return rep;
}

ParamData param_data(const RatMat& P, const RatMat& C) {
    if (!stabilizes(P, C).ok)
        throw std::invalid_argument("param_data: C does not stabilize P");
    const ClosedLoopBlocks b = closed_loop(P, C);
    ParamData d;
    d.Ltilde = RatMat::hconcat(-(b.u_from_d * C), b.u_from_d);
    d.L = RatMat::vconcat(b.e_from_r, b.u_from_r);
    d.Mtilde = RatMat::hconcat(-b.e_from_d, b.e_from_r);
    d.M = RatMat::vconcat(b.u_from_d, P * b.u_from_d);
    return d;
}

RatMat plant_param(const RatMat& P, const RatMat& C, const RatMat& X) {
    const int n = P.rows(), m = P.cols();
    if (X.rows() != m + n || X.cols() != m + n)
        throw std::invalid_argument("plant_param: X must be (m+n) x (m+n)");
    if (!mat_is_stable(X).stable)
        throw std::invalid_argument("plant_param: X is not stable");
    const ParamData d = param_data(P, C);
    const RatMat icp = (RatMat::identity(m) - C * P).inverse();
    const RatMat ipc = (RatMat::identity(n) - P * C).inverse();
    const RatMat mxm = d.Mtilde * X * d.M; // n x m
    const RatMat numer = P * icp + mxm;
    const RatMat denom = icp + C * mxm;
    if (denom.det().is_zero() || (ipc + mxm * C).det().is_zero())
        throw degenerate_parametrization_error("plant_param: parametrization degenerate at this X");
    return numer * denom.inverse();
}

RatMat controller_param(const RatMat& P, const RatMat& C, const RatMat& W) {
    const int n = P.rows(), m = P.cols();
    if (W.rows() != n + m || W.cols() != n + m)
        throw std::invalid_argument("controller_param: W must be (n+m) x (n+m)");
    if (!mat_is_stable(W).stable)
        throw std::invalid_argument("controller_param: W is not stable");
    const ParamData d = param_data(P, C);
    const RatMat icp = (RatMat::identity(m) - C * P).inverse();
    const RatMat ipc = (RatMat::identity(n) - P * C).inverse();
    const RatMat lwl = d.Ltilde * W * d.L; // m x n
    const RatMat numer = C * ipc + lwl;
    const RatMat denom = ipc + P * lwl;
    if (denom.det().is_zero() || (icp + lwl * P).det().is_zero())
        throw degenerate_parametrization_error("controller_param: parametrization degenerate at this W");
    return numer * denom.inverse();
}

RatMat sample_stable_matrix(int rows, int cols, int max_degree, uint64_t seed) {
    if (rows <= 0 || cols <= 0 || max_degree < 0)
        throw std::invalid_argument("sample_stable_matrix: bad dimensions or degree");
    Rng rng(seed);
    RatMat result(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int numdeg = static_cast<int>(rng.below(static_cast<uint64_t>(max_degree) + 1));
            std::vector<Rat> coeffs(static_cast<size_t>(numdeg) + 1);
            for (auto& c : coeffs) c = Rat(rng.range(-9, 9));
            const Poly num(std::move(coeffs));
            Poly den = Poly::one();
            for (int k = 0; k < max_degree; ++k)
                den = den * Poly({Rat(rng.range(1, 10)), Rat(1)});
            result.at(i, j) = RatFunc(num, den);
        }
    return result;
}

} // namespace regula
