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

#include "regula/regulation.hpp"

#include "regula/rng.hpp"

namespace regula {

namespace {

RatMat shaped_generator(const RegulationProblem& prob) {
    if (!prob.Q) return prob.Gr;
    return *prob.Q * prob.Gr;
}

RatMat error_sensitivity(const RegulationProblem& prob) {
    const int n = prob.P.rows();
    const RatMat ImPC = RatMat::identity(n) - prob.P * prob.C;
    if (ImPC.det().is_zero())
        throw ill_posed_error("regulation: det(I - PC) = 0, interconnection ill-posed");
    return ImPC.inverse();
}

// Certificate from the canonical closed forms; verified before returning.
ImpCertificate make_certificate(const std::string& label, const RatFunc& theta,
                                const RatMat& ipc, const RatMat& ipcP, const RatMat& C) {
    ImpCertificate cert;
    cert.label = label;
    cert.theta = theta;
    cert.A = scalar_mul(theta, ipc);
    cert.B = -scalar_mul(theta, ipcP);
    const RatMat residual =
        scalar_mul(theta, RatMat::identity(cert.A.rows())) - cert.A - cert.B * C;
    if (!residual.is_zero())
        throw internal_defect_error("imp certificate: defining identity failed to verify");
    return cert;
}

// Stability of theta*(I-PC)^-1 and theta*(I-PC)^-1*P; failures appended.
bool theta_condition_holds(const RatFunc& theta, const RatMat& ipc, const RatMat& ipcP,
                           int row, int col, std::vector<ImpEntryFailure>& failures) {
    bool ok = true;
    MatStability sa = mat_is_stable(scalar_mul(theta, ipc));
    if (!sa.stable) {
        failures.push_back({row, col, "theta*(I-PC)^-1", std::move(sa.failures.front().verdict)});
        ok = false;
    }
    MatStability sb = mat_is_stable(scalar_mul(theta, ipcP));
    if (!sb.stable) {
        failures.push_back({row, col, "theta*(I-PC)^-1*P", std::move(sb.failures.front().verdict)});
        ok = false;
    }
    return ok;
}

} // namespace

void validate_problem(const RegulationProblem& prob) {
    const int n = prob.P.rows(), m = prob.P.cols();
    if (n == 0 || m == 0)
        throw std::invalid_argument("regulation: empty plant");
    if (prob.C.rows() != m || prob.C.cols() != n)
        throw std::invalid_argument("regulation: controller must be m x n for an n x m plant");
    if (prob.Gr.rows() != n || prob.Gr.cols() == 0)
        throw std::invalid_argument("regulation: signal generator must be n x q");
    if (prob.Q && (prob.Q->rows() != n || prob.Q->cols() != n))
        throw std::invalid_argument("regulation: disturbance shaping Q must be n x n");
}

bool is_regulating(const RegulationProblem& prob) {
    validate_problem(prob);
    return mat_is_stable(error_sensitivity(prob) * prob.Gr).stable;
}

bool is_disturbance_rejecting(const RegulationProblem& prob) {
    validate_problem(prob);
    // (I-PC)^-1 * P * Q * Gr is conformable only when the plant is square
    if (prob.P.rows() != prob.P.cols())
        throw std::invalid_argument(
            "is_disturbance_rejecting: defined for square plants only (P must be n x n)");
    return mat_is_stable(error_sensitivity(prob) * prob.P * shaped_generator(prob)).stable;
}

ImpReport imp_check(const RegulationProblem& prob) {
    validate_problem(prob);
    ImpReport rep;
    rep.stab = stabilizes(prob.P, prob.C);
    if (!rep.stab.ok) return rep;

    const RatMat ipc = error_sensitivity(prob);
    const RatMat ipcP = ipc * prob.P;
    bool all_ok = true;
    for (int i = 0; i < prob.Gr.rows(); ++i)
        for (int j = 0; j < prob.Gr.cols(); ++j)
            all_ok &= theta_condition_holds(prob.Gr.at(i, j), ipc, ipcP, i, j, rep.failures);
    rep.ok = all_ok;
    if (!all_ok) return rep;

    for (int i = 0; i < prob.Gr.rows(); ++i)
        for (int j = 0; j < prob.Gr.cols(); ++j) {
            const std::string label =
                "theta_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            rep.certificates.push_back(
                make_certificate(label, prob.Gr.at(i, j), ipc, ipcP, prob.C));
        }
    return rep;
}

ImpGenReport imp_check_via_generator(const RegulationProblem& prob) {
    validate_problem(prob);
    ImpGenReport rep;
    std::vector<RatFunc> entries;
    for (int i = 0; i < prob.Gr.rows(); ++i)
        for (int j = 0; j < prob.Gr.cols(); ++j) entries.push_back(prob.Gr.at(i, j));
    rep.generator = ideal_generator(entries);
    rep.stab = stabilizes(prob.P, prob.C);
    if (!rep.stab.ok) return rep;

    const RatMat ipc = error_sensitivity(prob);
    const RatMat ipcP = ipc * prob.P;
    rep.ok = theta_condition_holds(rep.generator, ipc, ipcP, -1, -1, rep.failures);
    if (rep.ok)
        rep.certificate = make_certificate("generator", rep.generator, ipc, ipcP, prob.C);
    return rep;
}

ClassicalReport imp_check_classical(const RegulationProblem& prob,
                                    const std::optional<RcfData>& rcf) {
    validate_problem(prob);
    ClassicalReport rep;
    std::vector<RatFunc> entries;
    for (int i = 0; i < prob.Gr.rows(); ++i)
        for (int j = 0; j < prob.Gr.cols(); ++j) entries.push_back(prob.Gr.at(i, j));
    rep.d = internal_model_element(entries);
    rep.stab = stabilizes(prob.P, prob.C);

    if (rep.stab.ok) {
        const RatMat ipc = error_sensitivity(prob);
        const RatMat ipcP = ipc * prob.P;
        const RatFunc dinv = rep.d.inverse();
        rep.ok = theta_condition_holds(dinv, ipc, ipcP, -1, -1, rep.failures);
        if (rep.ok)
            rep.certificate = make_certificate("classical", dinv, ipc, ipcP, prob.C);
    }

    if (rcf) {
        rep.rcf_supplied = true;
        const int n = prob.P.rows(), m = prob.P.cols();
        const RatMat &N = rcf->N, &D = rcf->D;
        try {
            if (N.rows() != m || N.cols() != n || D.rows() != n || D.cols() != n)
                throw rcf_construction_error("wrong N or D dimensions");
            if (!mat_is_stable(N).stable || !mat_is_stable(D).stable)
                throw rcf_construction_error("N or D has entries outside S");
            if (D.det().is_zero()) throw rcf_construction_error("det(D) = 0");
            if (prob.C != N * D.inverse())
                throw rcf_construction_error("N*D^-1 does not equal the controller");
            RatMat X, Y;
            if (rcf->X && rcf->Y) {
                X = *rcf->X;
                Y = *rcf->Y;
                if (!mat_is_stable(X).stable || !mat_is_stable(Y).stable)
                    throw rcf_construction_error("supplied X or Y has entries outside S");
                if (X * N + Y * D != RatMat::identity(n))
                    throw rcf_construction_error("X*N + Y*D != I");
            } else {
                std::tie(X, Y) = rcf_bezout_for_stable_plant(prob.P, N, D);
            }
            rep.rcf_X = X;
            rep.rcf_Y = Y;
            rep.rcf_verified = true;
        } catch (const rcf_construction_error& e) {
            rep.rcf_verified = false;
            rep.rcf_error = std::string("not a right coprime factorization: ") + e.what();
        }
        if (rep.rcf_verified) {
            bool div_ok = true;
            for (int i = 0; i < D.rows() && div_ok; ++i)
                for (int j = 0; j < D.cols() && div_ok; ++j)
                    div_ok = divides_in_S(rep.d, D.at(i, j));
            rep.divisibility_ok = div_ok;
            if (div_ok) {
                const RatMat D0 = scalar_mul(rep.d.inverse(), D);
                if (!mat_is_stable(D0).stable)
                    throw internal_defect_error("imp_check_classical: D0 unstable despite divisibility");
                rep.D0 = D0;
            }
        }
    }
    return rep;
}

std::pair<RatMat, RatMat> rcf_bezout_for_stable_plant(const RatMat& P, const RatMat& N,
                                                      const RatMat& D) {
    const int n = P.rows(), m = P.cols();
    if (N.rows() != m || N.cols() != n || D.rows() != n || D.cols() != n)
        throw rcf_construction_error("rcf_bezout_for_stable_plant: wrong dimensions");
    if (!mat_is_stable(P).stable)
        throw rcf_construction_error("rcf_bezout_for_stable_plant: plant is not stable");
    if (D.det().is_zero())
        throw rcf_construction_error("rcf_bezout_for_stable_plant: det(D) = 0");
    if (!stabilizes(P, N * D.inverse()).ok)
        throw rcf_construction_error("rcf_bezout_for_stable_plant: N*D^-1 does not stabilize P");
    const RatMat DPN = D - P * N;
    if (DPN.det().is_zero())
        throw rcf_construction_error("rcf_bezout_for_stable_plant: D - P*N singular");
    const RatMat Y = DPN.inverse();
    const RatMat X = -(Y * P);
    if (!mat_is_stable(X).stable || !mat_is_stable(Y).stable)
        throw rcf_construction_error("rcf_bezout_for_stable_plant: witnesses not stable");
    if (X * N + Y * D != RatMat::identity(n))
        throw internal_defect_error("rcf_bezout_for_stable_plant: Bezout identity failed");
    return {X, Y};
}

ProbeReport robustness_probe(const RegulationProblem& prob, int samples, int max_degree,
                             uint64_t seed) {
    validate_problem(prob);
    if (samples < 0) throw std::invalid_argument("robustness_probe: negative sample count");
    if (!stabilizes(prob.P, prob.C).ok)
        throw std::invalid_argument("robustness_probe: C does not stabilize P");

    ProbeReport rep;
    rep.requested = samples;
    rep.imp_ok = imp_check(prob).ok;

    const int n = prob.P.rows(), m = prob.P.cols();
    Rng seeder(seed);
    for (int i = 0; i < samples; ++i) {
        const uint64_t sub_seed = seeder.next();
        const RatMat X = sample_stable_matrix(m + n, m + n, max_degree, sub_seed);
        RatMat PX;
        try {
            PX = plant_param(prob.P, prob.C, X);
        } catch (const degenerate_parametrization_error&) {
            ++rep.degenerate_skips;
            continue;
        }
        ++rep.checked;
        if (!stabilizes(PX, prob.C).ok) {
            rep.violations.push_back({i, "stabilizes"});
            continue;
        }
        RegulationProblem perturbed{PX, prob.C, prob.Gr, prob.Q};
        if (!is_regulating(perturbed)) {
            ++rep.regulating_failures;
            if (rep.imp_ok) rep.violations.push_back({i, "regulating"});
        }
        if (n == m && !is_disturbance_rejecting(perturbed)) {
            ++rep.rejecting_failures;
            if (rep.imp_ok) rep.violations.push_back({i, "rejecting"});
        }
    }
    return rep;
}

} // namespace regula
