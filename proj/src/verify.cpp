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

#include "regula/verify.hpp"

namespace regula {

namespace {

std::string describe(const Json& cert) {
    std::string kind = cert.value("kind", "?");
    std::string label = cert.value("label", "");
    return label.empty() ? kind : kind + " " + label;
}

bool verify_imp(const Json& cert, std::string& reason) {
    const RatFunc theta = ratfunc_from_json(cert.at("theta"));
    const RatMat C = mat_from_json(cert.at("controller"));
    const RatMat A = mat_from_json(cert.at("A"));
    const RatMat B = mat_from_json(cert.at("B"));
    if (A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != C.rows() ||
        C.cols() != A.cols()) {
        reason = "inconsistent certificate dimensions";
        return false;
    }
    if (!mat_is_stable(A).stable) {
        reason = "A is not stable";
        return false;
    }
    if (!mat_is_stable(B).stable) {
        reason = "B is not stable";
        return false;
    }
    const RatMat residual = scalar_mul(theta, RatMat::identity(A.rows())) - A - B * C;
    if (!residual.is_zero()) {
        reason = "theta*I - A - B*C is not zero";
        return false;
    }
    return true;
}

bool verify_scalar_coprime(const Json& cert, std::string& reason) {
    const RatFunc g = ratfunc_from_json(cert.at("g"));
    const RatFunc N = ratfunc_from_json(cert.at("N"));
    const RatFunc D = ratfunc_from_json(cert.at("D"));
    const RatFunc x = ratfunc_from_json(cert.at("x"));
    const RatFunc y = ratfunc_from_json(cert.at("y"));
    if (D.is_zero()) {
        reason = "D = 0";
        return false;
    }
    for (auto&& [f, name] : {std::pair{N, "N"}, {D, "D"}, {x, "x"}, {y, "y"}}) {
        if (!in_S(f).stable) {
            reason = std::string(name) + " is not in S";
            return false;
        }
    }
    if (g != N / D) {
        reason = "g != N/D";
        return false;
    }
    if (x * N + y * D != RatFunc::one()) {
        reason = "x*N + y*D != 1";
        return false;
    }
    return true;
}

bool verify_one(const Json& cert, std::string& reason) {
    if (!cert.is_object() || !cert.contains("kind"))
        throw input_error("certificate: expected an object with a \"kind\" field");
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "imp") return verify_imp(cert, reason);
    if (kind == "scalar_coprime") return verify_scalar_coprime(cert, reason);
    throw input_error("certificate: unknown kind \"" + kind + "\"");
}

} // namespace

VerifyResult verify_certificate_json(const Json& doc) {
    VerifyResult res;
    std::vector<Json> certs;
    if (doc.is_object() && doc.contains("certificates")) {
        if (!doc.at("certificates").is_array() || doc.at("certificates").empty())
            throw input_error("report: \"certificates\" must be a nonempty array");
        for (const auto& c : doc.at("certificates")) certs.push_back(c);
    } else {
        certs.push_back(doc);
    }
    for (const auto& c : certs) {
        std::string reason;
        const bool ok = verify_one(c, reason);
        res.checked.push_back(describe(c) + (ok ? ": verified" : ": FAILED (" + reason + ")"));
        if (!ok && res.ok) {
            res.ok = false;
            res.reason = describe(c) + ": " + reason;
        }
    }
    return res;
}

} // namespace regula
