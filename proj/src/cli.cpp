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

#include "regula/fixtures.hpp"
#include "regula/parse.hpp"
#include "regula/problem_io.hpp"
#include "regula/verify.hpp"
#include "regula/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace regula {

namespace {

struct LoadedProblem {
    ProblemFile pf;
    std::string source;
    std::string digest;
};

LoadedProblem load_problem(const std::string& path, const std::string& fixture) {
    if (path.empty() == fixture.empty())
        throw input_error("provide exactly one input: a problem file or --fixture <name>");
    std::string text, source;
    if (!fixture.empty()) {
        const char* builtin = builtin_fixture_json(fixture);
        if (builtin == nullptr) {
            std::string names;
            for (const auto& n : builtin_fixture_names())
                names += (names.empty() ? "" : ", ") + n;
            throw input_error("unknown fixture \"" + fixture + "\" (available: " + names + ")");
        }
        text = builtin;
        source = "builtin:" + fixture;
    } else {
        text = read_file(path);
        source = path;
    }
    LoadedProblem lp;
    lp.pf = problem_from_json(parse_json_text(text, source));
    lp.source = source;
    lp.digest = fnv1a_hex(text);
    return lp;
}

RcfData load_rcf(const std::string& location) {
    std::string text;
    if (location.rfind("builtin:", 0) == 0) {
        const char* builtin = builtin_rcf_json(location.substr(8));
        if (builtin == nullptr) throw input_error("unknown built-in rcf \"" + location + "\"");
        text = builtin;
    } else {
        text = read_file(location);
    }
    return rcf_from_json(parse_json_text(text, location));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string reason_str(const StabilityVerdict& v) {
    switch (v.reason) {
        case StabilityReason::improper: return "improper";
        case StabilityReason::unstable_denominator: {
            std::string s = "unstable_denominator";
            if (v.routh_row) s += ", Routh row " + std::to_string(*v.routh_row);
            return s;
        }
        default: return "ok";
    }
}

Json base_report(const std::vector<std::string>& args) {
    Json rep = Json::object();
    rep["format"] = kFormatVersion;
    rep["tool"] = kToolName;
    rep["version"] = kToolVersion;
    rep["command"] = args;
    return rep;
}

void attach_input(Json& rep, const LoadedProblem& lp) {
    Json in = Json::object();
    in["source"] = lp.source;
    in["digest"] = lp.digest;
    if (!lp.pf.name.empty()) in["name"] = lp.pf.name;
    rep["input"] = std::move(in);
}

Json stabilize_witnesses(const StabilizeReport& sr) {
    Json ws = Json::array();
    for (const auto& f : sr.failures) {
        Json w = Json::object();
        w["block"] = f.block;
        w["entry"] = Json::array({f.row + 1, f.col + 1});
        w["verdict"] = verdict_to_json(f.verdict);
        ws.push_back(std::move(w));
    }
    return ws;
}

Json imp_witnesses(const std::vector<ImpEntryFailure>& fs) {
    Json ws = Json::array();
    for (const auto& f : fs) {
        Json w = Json::object();
        if (f.row >= 0) w["entry"] = Json::array({f.row + 1, f.col + 1});
        w["block"] = f.block;
        w["verdict"] = verdict_to_json(f.verdict);
        ws.push_back(std::move(w));
    }
    return ws;
}

void describe_imp_failures(std::ostream& os, const std::vector<ImpEntryFailure>& fs) {
    for (const auto& f : fs) {
        os << "  ";
        if (f.row >= 0) os << "entry (" << f.row + 1 << "," << f.col + 1 << "): ";
        os << f.block << " not in S (" << reason_str(f.verdict) << ")\n";
    }
}

int handle_stabilizes(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const auto& prob = lp.pf.problem;
    const StabilizeReport sr = stabilizes(prob.P, prob.C);
    const int total = (prob.P.rows() + prob.P.cols()) * (prob.P.rows() + prob.P.cols());
    rep["verdicts"] = Json::object();
    rep["verdicts"]["well_posed"] = sr.well_posed;
    rep["verdicts"]["stabilizes"] = sr.ok;
    Json cl = Json::object();
    cl["entries_checked"] = sr.well_posed ? total : 0;
    cl["unstable_entries"] = static_cast<int>(sr.failures.size());
    rep["closed_loop"] = std::move(cl);
    rep["witnesses"] = stabilize_witnesses(sr);

    os << "well-posed: " << bool_str(sr.well_posed) << "\n";
    os << "stabilizes: " << bool_str(sr.ok) << "\n";
    if (sr.well_posed)
        os << "closed-loop entries in S: " << (total - static_cast<int>(sr.failures.size()))
           << " of " << total << "\n";
    for (const auto& f : sr.failures)
        os << "  unstable " << f.block << " entry (" << f.row + 1 << "," << f.col + 1
           << "): " << reason_str(f.verdict) << "\n";
    return sr.ok ? 0 : 1;
}

int handle_regulate(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const bool ok = is_regulating(lp.pf.problem);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["regulating"] = ok;
    os << "regulating: " << bool_str(ok) << "\n";
    return ok ? 0 : 1;
}

int handle_reject(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const bool ok = is_disturbance_rejecting(lp.pf.problem);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["disturbance_rejecting"] = ok;
    os << "disturbance rejecting: " << bool_str(ok) << "\n";
    return ok ? 0 : 1;
}

int handle_imp_entrywise(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const auto& prob = lp.pf.problem;
    const ImpReport ir = imp_check(prob);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["stabilizes"] = ir.stab.ok;
    rep["verdicts"]["imp"] = ir.ok;
    rep["witnesses"] = imp_witnesses(ir.failures);
    if (!ir.stab.ok) rep["stabilize_witnesses"] = stabilize_witnesses(ir.stab);
    Json certs = Json::array();
    for (const auto& c : ir.certificates)
        certs.push_back(imp_certificate_to_json(c, prob.C));
    rep["certificates"] = std::move(certs);

    os << "stabilizes: " << bool_str(ir.stab.ok) << "\n";
    os << "imp: " << bool_str(ir.ok) << "\n";
    if (ir.ok) {
        os << "certificates: " << ir.certificates.size() << " (";
        for (size_t i = 0; i < ir.certificates.size(); ++i)
            os << (i ? ", " : "") << ir.certificates[i].label;
        os << ")\n";
    }
    describe_imp_failures(os, ir.failures);
    return ir.ok ? 0 : 1;
}

int handle_imp_generator(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const auto& prob = lp.pf.problem;
    const ImpGenReport ir = imp_check_via_generator(prob);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["stabilizes"] = ir.stab.ok;
    rep["verdicts"]["imp_generator"] = ir.ok;
    rep["generator"] = ratfunc_to_json(ir.generator);
    rep["generator_expression"] = ir.generator.str();
    rep["witnesses"] = imp_witnesses(ir.failures);
    Json certs = Json::array();
    if (ir.certificate) certs.push_back(imp_certificate_to_json(*ir.certificate, prob.C));
    rep["certificates"] = std::move(certs);

    os << "stabilizes: " << bool_str(ir.stab.ok) << "\n";
    os << "ideal generator: " << ir.generator.str() << "\n";
    os << "imp (via generator): " << bool_str(ir.ok) << "\n";
    describe_imp_failures(os, ir.failures);
    return ir.ok ? 0 : 1;
}

int handle_imp_classical(const LoadedProblem& lp, const std::string& rcf_path, Json& rep,
                         std::ostream& os) {
    const auto& prob = lp.pf.problem;
    std::optional<RcfData> rcf;
    if (!rcf_path.empty()) rcf = load_rcf(rcf_path);
    const ClassicalReport cr = imp_check_classical(prob, rcf);

    rep["verdicts"] = Json::object();
    rep["verdicts"]["stabilizes"] = cr.stab.ok;
    rep["verdicts"]["imp_classical"] = cr.ok;
    rep["internal_model"] = ratfunc_to_json(cr.d);
    rep["internal_model_expression"] = cr.d.str();
    rep["witnesses"] = imp_witnesses(cr.failures);
    Json certs = Json::array();
    if (cr.certificate) certs.push_back(imp_certificate_to_json(*cr.certificate, prob.C));
    rep["certificates"] = std::move(certs);

    os << "stabilizes: " << bool_str(cr.stab.ok) << "\n";
    os << "internal model d: " << cr.d.str() << "\n";
    os << "imp (classical): " << bool_str(cr.ok) << "\n";
    describe_imp_failures(os, cr.failures);

    bool rcf_ok = true;
    if (cr.rcf_supplied) {
        Json rj = Json::object();
        rj["verified"] = cr.rcf_verified;
        if (!cr.rcf_verified) {
            rj["error"] = cr.rcf_error;
            os << "rcf: " << cr.rcf_error << "\n";
            rcf_ok = false;
        } else {
            os << "rcf: verified\n";
            rj["X"] = mat_to_json(*cr.rcf_X);
            rj["Y"] = mat_to_json(*cr.rcf_Y);
            rj["d_divides_D"] = *cr.divisibility_ok;
            os << "d divides every entry of D: " << bool_str(*cr.divisibility_ok) << "\n";
            if (cr.D0) {
                rj["D0"] = mat_to_json(*cr.D0);
                os << "D0 = d^-1*D: stable\n";
            } else {
                rcf_ok = false;
            }
        }
        rep["rcf"] = std::move(rj);
        if (cr.ok && cr.rcf_verified && !*cr.divisibility_ok)
            throw internal_defect_error(
                "imp_check_classical: divisibility disagrees with the d^-1 conditions");
    }
    return (cr.ok && rcf_ok) ? 0 : 1;
}

int handle_ideal_generator(const LoadedProblem& lp, Json& rep, std::ostream& os) {
    const auto& prob = lp.pf.problem;
    std::vector<RatFunc> entries;
    for (int i = 0; i < prob.Gr.rows(); ++i)
        for (int j = 0; j < prob.Gr.cols(); ++j) entries.push_back(prob.Gr.at(i, j));
    const RatFunc g = ideal_generator(entries);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["generator_verified"] = true;
    rep["generator"] = ratfunc_to_json(g);
    rep["generator_expression"] = g.str();
    os << "ideal generator: " << g.str() << "\n";
    return 0;
}

int handle_coprime_scalar(const std::string& expr, Json& rep, std::ostream& os) {
    RatFunc g;
    try {
        g = parse_ratfunc(expr);
    } catch (const parse_error& e) {
        throw input_error(std::string("bad expression: ") + e.what());
    }
    if (g.is_zero()) throw input_error("coprime scalar: the zero function has no factorization");
    const ScalarCoprimeFactorization f = scalar_coprime_factorization(g);
    rep["input"] = Json::object();
    rep["input"]["expression"] = expr;
    rep["input"]["digest"] = fnv1a_hex(expr);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["coprime_factorization_verified"] = true;
    rep["certificates"] = Json::array({scf_certificate_to_json(f)});
    os << "g = " << f.g.str() << "\n";
    os << "N = " << f.N.str() << "\n";
    os << "D = " << f.D.str() << "\n";
    os << "x = " << f.x.str() << "\n";
    os << "y = " << f.y.str() << "\n";
    os << "identity x*N + y*D = 1: verified\n";
    return 0;
}

int handle_verify(const std::string& file, Json& rep, std::ostream& os) {
    const std::string text = read_file(file);
    const Json doc = parse_json_text(text, file);
    const VerifyResult vr = verify_certificate_json(doc);
    rep["input"] = Json::object();
    rep["input"]["source"] = file;
    rep["input"]["digest"] = fnv1a_hex(text);
    rep["verdicts"] = Json::object();
    rep["verdicts"]["certificates_verified"] = vr.ok;
    rep["checked"] = vr.checked;
    if (!vr.ok) rep["failure"] = vr.reason;
    for (const auto& line : vr.checked) os << line << "\n";
    os << (vr.ok ? "all certificates verified\n" : "verification FAILED\n");
    return vr.ok ? 0 : 1;
}

int handle_probe(const LoadedProblem& lp, int samples, int degree, uint64_t seed, Json& rep,
                 std::ostream& os) {
    const ProbeReport pr = robustness_probe(lp.pf.problem, samples, degree, seed);
    const bool clean = pr.violations.empty();
    rep["verdicts"] = Json::object();
    rep["verdicts"]["probe_clean"] = clean;
    Json pj = Json::object();
    pj["requested"] = pr.requested;
    pj["checked"] = pr.checked;
    pj["degenerate_skips"] = pr.degenerate_skips;
    pj["nominal_imp"] = pr.imp_ok;
    pj["regulating_failures"] = pr.regulating_failures;
    pj["rejecting_failures"] = pr.rejecting_failures;
    pj["seed"] = seed;
    pj["max_degree"] = degree;
    Json viol = Json::array();
    for (const auto& v : pr.violations) {
        Json e = Json::object();
        e["sample"] = v.sample;
        e["stage"] = v.stage;
        viol.push_back(std::move(e));
    }
    pj["violations"] = std::move(viol);
    rep["probe"] = std::move(pj);

    os << "probe: " << pr.requested << " samples requested, " << pr.checked << " checked, "
       << pr.degenerate_skips << " degenerate skipped\n";
    os << "nominal imp: " << bool_str(pr.imp_ok) << "\n";
    if (!pr.imp_ok)
        os << "regulation failures on perturbed plants: " << pr.regulating_failures
           << " regulating, " << pr.rejecting_failures << " rejecting\n";
    os << "violations: " << pr.violations.size() << "\n";
    for (const auto& v : pr.violations)
        os << "  sample " << v.sample << ": " << v.stage << " failed\n";
    return clean ? 0 : 1;
}

} // namespace

RunResult run_command(const std::vector<std::string>& args) {
    RunResult result;
    std::ostringstream os;

    CLI::App app{"exact stabilization and robust-regulation certificates for rational MIMO systems",
                 "regula"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    std::string problem_path, fixture, json_path, rcf_path, cert_file, expr;
    std::string via = "entrywise";
    bool classical = false;
    int samples = 100, degree = 2;
    uint64_t seed = 42;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("problem", problem_path, "problem file (JSON)");
        cmd->add_option("--fixture", fixture, "built-in fixture: quadtank, quadtank-typo");
        cmd->add_option("--json", json_path, "also write the report to this path");
    };

    CLI::App* check = app.add_subcommand("check", "run a verdict on a problem");
    check->require_subcommand(1);
    CLI::App* c_stab = check->add_subcommand("stabilizes", "does C stabilize P");
    CLI::App* c_reg = check->add_subcommand("regulate", "is the error map of the generator stable");
    CLI::App* c_rej = check->add_subcommand("reject", "is the disturbance error map stable");
    CLI::App* c_imp = check->add_subcommand("imp", "internal model principle");
    for (CLI::App* c : {c_stab, c_reg, c_rej, c_imp}) add_common(c);
    c_imp->add_option("--via", via, "entrywise (default) or generator")
        ->check(CLI::IsMember({"entrywise", "generator"}));
    c_imp->add_flag("--classical", classical, "divisibility form with the internal model element");
    c_imp->add_option("--rcf", rcf_path, "controller RCF file (or builtin:quadtank)");

    CLI::App* ideal = app.add_subcommand("ideal", "fractional ideal operations");
    ideal->require_subcommand(1);
    CLI::App* i_gen = ideal->add_subcommand("generator", "generator of the ideal of the Gr entries");
    add_common(i_gen);

    CLI::App* coprime = app.add_subcommand("coprime", "coprime factorizations over S");
    coprime->require_subcommand(1);
    CLI::App* cp_scalar = coprime->add_subcommand("scalar", "scalar coprime factorization with witnesses");
    cp_scalar->add_option("expr", expr, "rational function expression")->required();
    cp_scalar->add_option("--json", json_path, "also write the report to this path");

    CLI::App* verify = app.add_subcommand("verify", "independent certificate checking");
    CLI::App* v_cert = verify->add_subcommand("certificate", "re-verify a certificate or report file");
    v_cert->add_option("file", cert_file, "certificate or report JSON")->required();
    v_cert->add_option("--json", json_path, "also write the report to this path");

    CLI::App* probe = app.add_subcommand("probe", "robustness probe over the stabilized-plant family");
    add_common(probe);
    probe->add_option("--samples", samples, "number of sampled perturbations (default 100)");
    probe->add_option("--degree", degree, "max entry degree of sampled parameters (default 2)");
    probe->add_option("--seed", seed, "sampling seed (default 42)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::CallForVersion& e) {
        result.text = std::string(e.what()) + "\n";
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.text = std::string(e.what()) + "\n";
        result.exit_code = 2;
        return result;
    }

    Json rep = base_report(args);
    int exit_code = 0;
    try {
        if (c_imp->parsed()) {
            if (classical && c_imp->count("--via") > 0)
                throw input_error("--classical and --via cannot be combined");
            if (!classical && !rcf_path.empty())
                throw input_error("--rcf requires --classical");
        }
        if (c_stab->parsed() || c_reg->parsed() || c_rej->parsed() || c_imp->parsed() ||
            i_gen->parsed() || probe->parsed()) {
            const LoadedProblem lp = load_problem(problem_path, fixture);
            attach_input(rep, lp);
            if (c_stab->parsed()) exit_code = handle_stabilizes(lp, rep, os);
            else if (c_reg->parsed()) exit_code = handle_regulate(lp, rep, os);
            else if (c_rej->parsed()) exit_code = handle_reject(lp, rep, os);
            else if (c_imp->parsed()) {
                if (classical) exit_code = handle_imp_classical(lp, rcf_path, rep, os);
                else if (via == "generator") exit_code = handle_imp_generator(lp, rep, os);
                else exit_code = handle_imp_entrywise(lp, rep, os);
            } else if (i_gen->parsed()) exit_code = handle_ideal_generator(lp, rep, os);
            else exit_code = handle_probe(lp, samples, degree, seed, rep, os);
        } else if (cp_scalar->parsed()) {
            exit_code = handle_coprime_scalar(expr, rep, os);
        } else if (v_cert->parsed()) {
            exit_code = handle_verify(cert_file, rep, os);
        } else {
            throw input_error("no command selected");
        }
    } catch (const internal_defect_error& e) {
        result.text = std::string("internal verification defect: ") + e.what() + "\n";
        result.exit_code = 3;
        return result;
    } catch (const input_error& e) {
        result.text = std::string("input error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const nlohmann::json::exception& e) {
        result.text = std::string("input error: malformed document: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const ill_posed_error& e) {
        result.text = std::string("input error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const std::invalid_argument& e) {
        result.text = std::string("input error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const std::domain_error& e) {
        result.text = std::string("input error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    }

    rep["exit_code"] = exit_code;
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            result.text = "input error: cannot write report to " + json_path + "\n";
            result.exit_code = 2;
            return result;
        }
        out << rep.dump(2) << "\n";
    }
    result.exit_code = exit_code;
    result.text = os.str();
    result.report = std::move(rep);
    return result;
}

} // namespace regula
