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

#include "regula/cli.hpp"
#include "regula/verify.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace regula;
using namespace regula::test;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/regula_test_" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_SUITE_BEGIN("parse_io");

TEST_CASE("expression parsing") {
    CHECK(rf("(s+1)^3/(s*(s^2+1))") ==
          RatFunc(pl("s^3+3*s^2+3*s+1"), pl("s^3+s")));
    CHECK(rf("-(4*s^2+3*s+5)/(5*s*(s^2+1))") ==
          RatFunc(pl("-(4*s^2+3*s+5)") * Rat(1, 5), pl("s^3+s")));
    CHECK(rf("0").is_zero());
    CHECK(rf("3/4") == RatFunc(Rat(3, 4)));
    CHECK(rf("1+2*s^2") == RatFunc(pl("2*s^2+1")));
    CHECK(rf("(1+2)*s^2") == RatFunc(pl("3*s^2")));
    CHECK(rf("-s^2") == RatFunc(pl("-s^2")));
    CHECK(rf("2^3") == RatFunc(Rat(8)));
    CHECK(rf("(s+1)^0") == RatFunc::one());
    CHECK(rf("  ( s + 1 ) / ( s + 2 )  ") == rf("(s+1)/(s+2)"));
    CHECK(rf("1/s^2") == RatFunc(Poly::one(), pl("s^2"))); // ^ binds tighter than /
}

TEST_CASE("parse errors carry positions") {
    const auto pos_of = [](const std::string& text) -> size_t {
        try {
            parse_ratfunc(text);
        } catch (const parse_error& e) {
            return e.position();
        }
        FAIL("expected parse_error for: ", text);
        return SIZE_MAX;
    };
    CHECK(pos_of("s+") == 2);
    CHECK(pos_of("(s+1") == 4);
    CHECK(pos_of("x+1") == 0);
    CHECK(pos_of("") == 0);
    CHECK(pos_of("s^-1") == 2);
    CHECK(pos_of("s s") == 2);
    CHECK(pos_of("1/(s-s)") == 2);
}

TEST_CASE("serialized expressions reparse to equal values") {
    for (const char* text :
         {"(s+1)^3/(s*(s^2+1))", "0", "1", "-1/2", "s", "(2*s+1)/(s+1)",
          "s*(s-1)*(s+2)/(s+1)^4", "-(4*s^2+3*s+5)/(5*s*(s^2+1))", "s^2+1"}) {
        const RatFunc f = rf(text);
        CHECK(parse_ratfunc(f.str()) == f);
    }
    Rng rng(101);
    for (int i = 0; i < 60; ++i) {
        const RatFunc f(random_poly(rng, 5), random_poly(rng, 5, true));
        CHECK(parse_ratfunc(f.str()) == f);
    }
}

TEST_CASE("json round trips") {
    Rng rng(103);
    for (int i = 0; i < 40; ++i) {
        const RatFunc f(random_poly(rng, 4), random_poly(rng, 4, true));
        CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);
    }
    const Rat big = Rat::from_string("123456789012345678901234567890/7");
    CHECK(rat_from_json(rat_to_json(big)) == big);
    CHECK(rat_to_json(Rat(5)).is_number_integer());
    CHECK(rat_to_json(Rat(1, 2)).is_string());

    const auto quad = fixture_problem("quadtank");
    CHECK(mat_from_json(mat_to_json(quad.C)) == quad.C);
}

TEST_CASE("json input forms and validation") {
    CHECK(ratfunc_from_json(Json("1/s")) == rf("1/s"));
    CHECK(ratfunc_from_json(Json::parse(R"({"num": [1], "den": [0, 1]})")) == rf("1/s"));
    CHECK(ratfunc_from_json(Json::parse(R"({"num": ["1/2"], "den": [0, 1]})")) == rf("1/(2*s)"));
    CHECK(ratfunc_from_json(Json(7)) == rf("7"));
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num": [1]})")), input_error);
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num": [1], "den": [0]})")), input_error);
    CHECK_THROWS_AS(ratfunc_from_json(Json("s+")), input_error);
    CHECK_THROWS_AS(rat_from_json(Json::parse("1.5")), input_error);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"([["1","2"],["3"]])")), input_error);
}

TEST_CASE("problem files") {
    const ProblemFile pf =
        problem_from_json(parse_json_text(builtin_fixture_json("quadtank"), "fixture"));
    CHECK(pf.name == "quadtank");
    CHECK(pf.problem.P.rows() == 2);
    CHECK(pf.problem.Gr.at(0, 1) == rf("-1/(s^2+1)"));
    CHECK_FALSE(pf.problem.Q.has_value());

    Json bad = parse_json_text(builtin_fixture_json("quadtank"), "fixture");
    bad.erase("controller");
    CHECK_THROWS_AS(problem_from_json(bad), input_error);

    Json wrong_dims = parse_json_text(builtin_fixture_json("quadtank"), "fixture");
    wrong_dims["generator"] = Json::parse(R"([["1/s"]])");
    CHECK_THROWS_AS(problem_from_json(wrong_dims), input_error);

    Json bad_format = parse_json_text(builtin_fixture_json("quadtank"), "fixture");
    bad_format["format"] = 99;
    CHECK_THROWS_AS(problem_from_json(bad_format), input_error);
}

TEST_CASE("fixture files on disk match the built-ins") {
    const auto file_matches = [](const std::string& path, const char* builtin) {
        CHECK(read_file(path) == std::string(builtin));
    };
    file_matches("fixtures/quadtank.json", builtin_fixture_json("quadtank"));
    file_matches("fixtures/quadtank_typo.json", builtin_fixture_json("quadtank-typo"));
    file_matches("fixtures/quadtank_rcf.json", builtin_rcf_json("quadtank"));
}

TEST_CASE("digest is a stable content hash") {
    CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
    CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
    CHECK(fnv1a_hex("").rfind("fnv1a:", 0) == 0);
}

TEST_CASE("certificate verification accepts tool output and rejects tampering") {
    const auto quad = fixture_problem("quadtank");
    const ImpReport rep = imp_check({quad.P, quad.C, quad.Gr, std::nullopt});
    REQUIRE(rep.ok);
    const Json cert = imp_certificate_to_json(rep.certificates[0], quad.C);
    CHECK(verify_certificate_json(cert).ok);

    Json broken = cert;
    broken["A"][0][0]["num"][0] = "1/3";
    const VerifyResult vr = verify_certificate_json(broken);
    CHECK_FALSE(vr.ok);
    CHECK(vr.reason.find("theta*I - A - B*C") != std::string::npos);

    const Json scf = scf_certificate_to_json(scalar_coprime_factorization(rf("1/s")));
    CHECK(verify_certificate_json(scf).ok);
    Json scf_broken = scf;
    scf_broken["x"]["num"][0] = 2;
    CHECK_FALSE(verify_certificate_json(scf_broken).ok);

    Json unknown = Json::object();
    unknown["kind"] = "mystery";
    CHECK_THROWS_AS(verify_certificate_json(unknown), input_error);
}

TEST_CASE("cli: verdict exit codes") {
    CHECK(run_command({"check", "stabilizes", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"check", "imp", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"check", "imp", "--fixture", "quadtank-typo"}).exit_code == 1);
    CHECK(run_command({"check", "imp", "--via", "generator", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"check", "regulate", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"check", "reject", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"ideal", "generator", "--fixture", "quadtank"}).exit_code == 0);
    CHECK(run_command({"coprime", "scalar", "1/s"}).exit_code == 0);
    CHECK(run_command({"check", "imp", "--classical", "--rcf", "builtin:quadtank", "--fixture",
                       "quadtank"}).exit_code == 0);
}

TEST_CASE("cli: input error exit codes") {
    CHECK(run_command({"check", "stabilizes"}).exit_code == 2); // no input
    CHECK(run_command({"check", "stabilizes", "--fixture", "nope"}).exit_code == 2);
    CHECK(run_command({"check", "stabilizes", "/nonexistent.json"}).exit_code == 2);
    CHECK(run_command({"coprime", "scalar", "s+"}).exit_code == 2);
    CHECK(run_command({"coprime", "scalar", "0"}).exit_code == 2);
    CHECK(run_command({"bogus"}).exit_code == 2);
    CHECK(run_command({}).exit_code == 2);
    CHECK(run_command({"check"}).exit_code == 2); // missing sub-verdict
    CHECK(run_command({"check", "stabilizes", "--fixture", "quadtank", "--bogus"}).exit_code == 2);
    CHECK(run_command({"--help"}).exit_code == 0);
    const RunResult ver = run_command({"--version"});
    CHECK(ver.exit_code == 0);
    CHECK(ver.text.find("regula") != std::string::npos);
    // conflicting or dangling imp flags
    CHECK(run_command({"check", "imp", "--classical", "--via", "generator", "--fixture",
                       "quadtank"}).exit_code == 2);
    CHECK(run_command({"check", "imp", "--rcf", "builtin:quadtank", "--fixture",
                       "quadtank"}).exit_code == 2);
    // malformed certificate document: right shape, missing fields
    const std::string stub = write_temp("stub.json", R"({"kind": "imp"})");
    CHECK(run_command({"verify", "certificate", stub}).exit_code == 2);
    std::remove(stub.c_str());
    // both a file and a fixture is ambiguous
    CHECK(run_command({"check", "stabilizes", "fixtures/quadtank.json", "--fixture",
                       "quadtank"}).exit_code == 2);
    // ill-posed loop makes the regulate verdict undefined
    const std::string ill = write_temp("ill.json", R"({"format": 1,
        "plant": [["1"]], "controller": [["1"]], "generator": [["1/s"]]})");
    CHECK(run_command({"check", "regulate", ill}).exit_code == 2);
    // but stabilizes reports it as a plain false verdict
    CHECK(run_command({"check", "stabilizes", ill}).exit_code == 1);
}

TEST_CASE("cli: file-based problems with coefficient-form entries") {
    // 1x1 problem written in the canonical coefficient form end to end
    const std::string path = write_temp("scalar_problem.json", R"({
      "format": 1,
      "metadata": {"name": "scalar"},
      "plant":      [[{"num": [1], "den": [1, 1]}]],
      "controller": [[{"num": [-1, "-2/1"], "den": [0, 1]}]],
      "generator":  [[{"num": [1], "den": [0, 1]}]]
    })");
    // C = -(2s+1)/s has the pole at 0 that Gr = 1/s demands
    CHECK(run_command({"check", "stabilizes", path}).exit_code == 0);
    CHECK(run_command({"check", "imp", path}).exit_code == 0);
    CHECK(run_command({"check", "regulate", path}).exit_code == 0);
    const RunResult r = run_command({"ideal", "generator", path});
    CHECK(r.exit_code == 0);
    CHECK(ratfunc_from_json(r.report.at("generator")) == rf("1/s"));
    std::remove(path.c_str());
}

TEST_CASE("cli: reports are deterministic and self-verifying") {
    const std::vector<std::string> args = {"check", "imp", "--fixture", "quadtank"};
    const RunResult a = run_command(args);
    const RunResult b = run_command(args);
    CHECK(a.report.dump(2) == b.report.dump(2));
    CHECK(a.text == b.text);
    CHECK(a.report.at("certificates").size() == 4);
    CHECK(verify_certificate_json(a.report).ok);

    // probe reports are seed-deterministic
    const std::vector<std::string> pargs = {"probe", "--fixture", "quadtank", "--samples", "3",
                                            "--degree", "1", "--seed", "9"};
    CHECK(run_command(pargs).report.dump(2) == run_command(pargs).report.dump(2));
}

TEST_CASE("cli: json report file") {
    const std::string path = "/tmp/regula_test_report.json";
    std::remove(path.c_str());
    const RunResult r =
        run_command({"check", "imp", "--fixture", "quadtank", "--json", path});
    CHECK(r.exit_code == 0);
    const Json loaded = parse_json_text(read_file(path), "report");
    CHECK(loaded == r.report);
    CHECK(loaded.at("input").at("source") == "builtin:quadtank");
    CHECK(std::string(loaded.at("input").at("digest")).rfind("fnv1a:", 0) == 0);

    // a written report re-verifies through the file-based CLI path
    CHECK(run_command({"verify", "certificate", path}).exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("cli: coprime scalar report re-verifies through the file path") {
    const std::string path = "/tmp/regula_test_scf_report.json";
    std::remove(path.c_str());
    CHECK(run_command({"coprime", "scalar", "(s+2)/s", "--json", path}).exit_code == 0);
    CHECK(run_command({"verify", "certificate", path}).exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("cli: verify rejects a tampered certificate file") {
    const RunResult r = run_command({"check", "imp", "--fixture", "quadtank"});
    Json doc = r.report;
    doc["certificates"][2]["B"][1][0]["num"][0] = 41;
    const std::string path = write_temp("tampered.json", doc.dump());
    CHECK(run_command({"verify", "certificate", path}).exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("cli: probe verdict") {
    const RunResult r = run_command({"probe", "--fixture", "quadtank", "--samples", "3",
                                     "--degree", "1", "--seed", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("probe").at("requested") == 3);
    CHECK(r.report.at("verdicts").at("probe_clean") == true);
}

TEST_SUITE_END();
