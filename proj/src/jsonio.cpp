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

#include "regula/jsonio.hpp"

#include "regula/parse.hpp"

#include <fstream>
#include <sstream>

namespace regula {

Json rat_to_json(const Rat& r) {
    if (r.den() == 1 && r.num().fits_slong_p())
        return Json(r.num().get_si());
    return Json(r.str());
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        try {
            return Rat::from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            throw input_error(std::string("bad rational literal: ") + e.what());
        }
    }
    throw input_error("rational coefficient must be an integer or a \"p/q\" string");
}

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (const Rat& c : p.coeffs()) a.push_back(rat_to_json(c));
    return a;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("polynomial must be an array of ascending coefficients");
    std::vector<Rat> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

Json ratfunc_to_json(const RatFunc& f) {
    Json j = Json::object();
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatFunc ratfunc_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_ratfunc(j.get<std::string>());
        } catch (const parse_error& e) {
            throw input_error(std::string("bad expression: ") + e.what());
        }
    }
    if (j.is_number_integer()) return RatFunc(Rat(static_cast<long>(j.get<int64_t>())));
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw input_error("rational function object needs \"num\" and \"den\"");
        const Poly den = poly_from_json(j.at("den"));
        if (den.is_zero()) throw input_error("rational function has zero denominator");
        return RatFunc(poly_from_json(j.at("num")), den);
    }
    throw input_error("rational function must be an expression string or {num, den} object");
}

Json mat_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(ratfunc_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& r : j) {
        if (!r.is_array() || r.empty()) throw input_error("matrix rows must be nonempty arrays");
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(ratfunc_from_json(e));
    }
    try {
        return RatMat(rows);
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
}

Json verdict_to_json(const StabilityVerdict& v) {
    Json j = Json::object();
    j["stable"] = v.stable;
    switch (v.reason) {
        case StabilityReason::ok: j["reason"] = "ok"; break;
        case StabilityReason::improper: j["reason"] = "improper"; break;
        case StabilityReason::unstable_denominator: j["reason"] = "unstable_denominator"; break;
    }
    if (v.witness_den) j["denominator"] = poly_to_json(*v.witness_den);
    if (v.routh_row) j["routh_row"] = *v.routh_row;
    return j;
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int i = 15; i >= 0; --i) out.push_back(digits[(h >> (4 * i)) & 0xf]);
    return out;
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(what + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace regula
