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

#include "regula/problem_io.hpp"

#include "regula/version.hpp"

namespace regula {

namespace {

void check_format(const Json& j, const char* what) {
    if (!j.is_object()) throw input_error(std::string(what) + ": expected a JSON object");
    if (j.contains("format") && j.at("format") != kFormatVersion)
        throw input_error(std::string(what) + ": unsupported format version");
}

} // namespace

ProblemFile problem_from_json(const Json& j) {
    check_format(j, "problem file");
    for (const char* key : {"plant", "controller", "generator"})
        if (!j.contains(key))
            throw input_error(std::string("problem file: missing \"") + key + "\"");
    ProblemFile pf;
    pf.problem.P = mat_from_json(j.at("plant"));
    pf.problem.C = mat_from_json(j.at("controller"));
    pf.problem.Gr = mat_from_json(j.at("generator"));
    if (j.contains("disturbance_shaping"))
        pf.problem.Q = mat_from_json(j.at("disturbance_shaping"));
    if (j.contains("metadata") && j.at("metadata").is_object() &&
        j.at("metadata").contains("name"))
        pf.name = j.at("metadata").at("name").get<std::string>();
    try {
        validate_problem(pf.problem);
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
    return pf;
}

RcfData rcf_from_json(const Json& j) {
    check_format(j, "rcf file");
    if (!j.contains("N") || !j.contains("D"))
        throw input_error("rcf file: missing \"N\" or \"D\"");
    RcfData rcf;
    rcf.N = mat_from_json(j.at("N"));
    rcf.D = mat_from_json(j.at("D"));
    if (j.contains("X") != j.contains("Y"))
        throw input_error("rcf file: X and Y must be supplied together");
    if (j.contains("X")) {
        rcf.X = mat_from_json(j.at("X"));
        rcf.Y = mat_from_json(j.at("Y"));
    }
    return rcf;
}

Json imp_certificate_to_json(const ImpCertificate& cert, const RatMat& controller) {
    Json j = Json::object();
    j["format"] = kFormatVersion;
    j["kind"] = "imp";
    j["label"] = cert.label;
    j["theta"] = ratfunc_to_json(cert.theta);
    j["controller"] = mat_to_json(controller);
    j["A"] = mat_to_json(cert.A);
    j["B"] = mat_to_json(cert.B);
    return j;
}

Json scf_certificate_to_json(const ScalarCoprimeFactorization& f) {
    Json j = Json::object();
    j["format"] = kFormatVersion;
    j["kind"] = "scalar_coprime";
    j["g"] = ratfunc_to_json(f.g);
    j["N"] = ratfunc_to_json(f.N);
    j["D"] = ratfunc_to_json(f.D);
    j["x"] = ratfunc_to_json(f.x);
    j["y"] = ratfunc_to_json(f.y);
    return j;
}

} // namespace regula
