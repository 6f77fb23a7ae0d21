// conejump: exact pseudo-effective thresholds and cone ideal exponents.
//
// Exit codes: 0 success, 2 math-level failure (e.g. a side condition fails
// at the computed root), 3 regression mismatch against a supplied expected
// value, 64 usage or malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "conejump/json_io.hpp"

using namespace conejump;

namespace {

struct CommonOpts {
    std::string family;
    long k = 2, d = 1, n = 3, u = 2, m = 3, g = 2;
    std::string rm_variant = "mod23";
    std::string gram_file;
    std::string L_text, M_text, cone_text = "rank2";
    std::string expected_text;
    int digits = 30;
    bool no_timing = false;
    bool table = false;
    std::string config_file;
};

int default_digits() {
    if (const char* env = std::getenv("CONEJUMP_PRECISION")) {
        int v = std::atoi(env);
        if (v > 0 && v <= 10000) return v;
    }
    return 30;
}

void add_family_options(CLI::App* cmd, CommonOpts& o, bool include_m = true, bool include_n = true) {
    cmd->add_option("--family", o.family, "ee | isog | rm | rm1 | k3-nd | k3-lambda | cm | eg | p2");
    cmd->add_option("--k", o.k, "parameter for ee");
    cmd->add_option("--d", o.d, "parameter for isog / rm / k3-nd");
    if (include_n) cmd->add_option("--n", o.n, "parameter for rm / rm1");
    cmd->add_option("--u", o.u, "parameter for k3-nd");
    if (include_m) cmd->add_option("--m", o.m, "parameter for k3-lambda");
    cmd->add_option("--g", o.g, "parameter for eg");
    cmd->add_option("--gram", o.gram_file, "JSON file with {\"gram\": [[..]], \"labels\": [..]}");
    cmd->add_option("--L", o.L_text, "coordinates of L, e.g. \"[6,3,6]\"");
    cmd->add_option("--M", o.M_text, "coordinates of M");
    cmd->add_option("--cone", o.cone_text, "rank2 | ee | isogenous:<d> (custom lattices)");
    cmd->add_option("--expected", o.expected_text, "expected theta, \"p/q\" or exact-number JSON");
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--digits", o.digits, "decimal digits in renderings (env CONEJUMP_PRECISION)");
    cmd->add_flag("--no-timing", o.no_timing, "omit the timing field (byte-stable output)");
    cmd->add_flag("--table", o.table, "aligned text table instead of JSON where available");
    cmd->add_option("--config", o.config_file, "JSON config file ({\"digits\": n, \"no_timing\": b})");
}

void apply_config(CommonOpts& o) {
    if (o.config_file.empty()) return;
    std::ifstream in(o.config_file);
    if (!in) throw ParseError("cannot open config file " + o.config_file);
    Json cfg = Json::parse(in);
    if (o.digits == default_digits() && cfg.contains("digits")) o.digits = cfg["digits"].get<int>();
    if (cfg.value("no_timing", false)) o.no_timing = true;
}

Json parse_coords(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() != '[') t = "[" + t + "]";
    return Json::parse(t);
}

FamilySpec family_from_opts(const CommonOpts& o) {
    if (!o.gram_file.empty()) {
        std::ifstream in(o.gram_file);
        if (!in) throw ParseError("cannot open " + o.gram_file);
        Json j = Json::parse(in, nullptr, true, true);
        if (!o.L_text.empty()) j["L"] = parse_coords(o.L_text);
        if (!o.M_text.empty()) j["M"] = parse_coords(o.M_text);
        if (!j.contains("cone")) {
            auto colon = o.cone_text.find(':');
            if (colon == std::string::npos)
                j["cone"] = o.cone_text;
            else
                j["cone"] = Json{{"kind", o.cone_text.substr(0, colon)},
                                 {"d", std::stol(o.cone_text.substr(colon + 1))}};
        }
        if (!o.expected_text.empty()) {
            Json e;
            try {
                e = Json::parse(o.expected_text);
            } catch (...) {
                e = o.expected_text;
            }
            j["expected_theta"] = e;
        }
        if (!j.contains("needs_cover")) j["needs_cover"] = false;
        return family_from_json(j);
    }
    if (o.family == "ee") return family_EE(o.k);
    if (o.family == "isog") return family_isogenous(o.d);
    if (o.family == "rm") return family_RM(o.n, o.d, RMVariant::Mod23);
    if (o.family == "rm1") return family_RM(o.n, o.d, RMVariant::Mod1);
    if (o.family == "k3-nd") return family_K3_Nd(o.u, o.d == 1 ? 3 : o.d);
    if (o.family == "k3-lambda") return family_K3_Lambda(o.m);
    if (o.family == "cm") return family_CM();
    if (o.family == "eg") return family_Eg(o.g);
    if (o.family == "p2") return family_P2();
    throw ParseError("unknown or missing family; see --help");
}

class Envelope {
public:
    Envelope(std::string command, const CommonOpts& o) : opts_(o) {
        start_ = std::chrono::steady_clock::now();
        body_["command"] = std::move(command);
        body_["inputs"] = Json::object();
    }
    Json& inputs() { return body_["inputs"]; }
    Json& results() { return body_["results"]; }
    void emit() {
        if (!opts_.no_timing) {
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            body_["timing_ms"] = static_cast<double>(us) / 1000.0;
        }
        std::cout << body_.dump(2) << "\n";
    }

private:
    CommonOpts opts_;
    Json body_;
    std::chrono::steady_clock::time_point start_;
};

ConePoint parse_t_argument(const ConeIdealModel& model, const std::string& t_text,
                           const std::string& t_form, long n_value) {
    if (t_form == "n+kappa") {
        ConePoint t = model.jump_point(n_value);
        return t;
    }
    if (!t_form.empty()) throw ParseError("unknown --t-form " + t_form + " (supported: n+kappa)");
    return parse_cone_point(t_text, model.theta_ref);
}

int run_threshold(const CommonOpts& o, bool normalize) {
    FamilySpec spec = family_from_opts(o);
    Envelope env("threshold", o);
    env.inputs()["family"] = spec.display;
    ThresholdResult th = compute_threshold(spec);
    if (spec.expected_theta && ExactNumber::compare(th.theta, *spec.expected_theta) != 0)
        throw ExpectedMismatch("computed " + th.theta.to_string() + " != expected " +
                               spec.expected_theta->to_string());
    if (normalize) th = th.normalized_copy();
    env.results() = to_json(th, o.digits);
    env.emit();
    return 0;
}

int run_jumps(const CommonOpts& o, const std::string& from_text, const std::string& to_text) {
    FamilySpec spec = family_from_opts(o);
    ConeIdealModel model = model_from_family(spec);
    Envelope env("jumps", o);
    env.inputs()["family"] = spec.display;
    env.inputs()["from"] = from_text;
    env.inputs()["to"] = to_text;
    auto jumps = jumping_numbers(model, parse_rational(from_text), parse_rational(to_text));
    Json arr = Json::array();
    for (const auto& t : jumps) {
        Json j = to_json(t, o.digits);
        j["exponent_after"] = to_json(dfh_exponent(model, t));
        arr.push_back(j);
    }
    env.results()["count"] = jumps.size();
    env.results()["jumping_numbers"] = arr;
    env.emit();
    return 0;
}

int run_exponent(const CommonOpts& o, bool jm, long jm_m, const std::string& jm_qm,
                 const std::string& gamma_s, const std::string& t_text, const std::string& t_form,
                 long n_value) {
    Envelope env("exponent", o);
    if (jm) {
        env.inputs()["m"] = jm_m;
        env.inputs()["qm"] = jm_qm;
        env.inputs()["t"] = t_text;
        env.results() = to_json(jm_exponent(jm_m, Int(jm_qm), parse_rational(t_text)));
        env.emit();
        return 0;
    }
    if (!gamma_s.empty()) {
        env.inputs()["s"] = gamma_s;
        env.inputs()["t"] = t_text;
        env.results() = to_json(gamma_s_exponent(parse_rational(gamma_s), parse_rational(t_text)));
        env.emit();
        return 0;
    }
    CommonOpts fam = o;
    fam.m = jm_m;     // --m doubles as the k3-lambda parameter here
    fam.n = n_value;  // --n doubles as the rm parameter here
    FamilySpec spec = family_from_opts(fam);
    ConeIdealModel model = model_from_family(spec);
    ConePoint t = parse_t_argument(model, t_text, t_form, n_value);
    env.inputs()["family"] = spec.display;
    env.inputs()["t"] = to_json(t, o.digits);
    env.results() = to_json(dfh_exponent(model, t));
    env.emit();
    return 0;
}

int run_qm(const CommonOpts& o, long max_m, long single_m) {
    FamilySpec spec = family_from_opts(o);
    ConeIdealModel model = model_from_family(spec);
    Envelope env("qm", o);
    env.inputs()["family"] = spec.display;
    if (single_m > 0) {
        env.inputs()["m"] = single_m;
        env.results()["q_m"] = qm_psef(model, single_m).get_str();
        env.emit();
        return 0;
    }
    env.inputs()["max_m"] = max_m;
    QmReport rep = qm_sequence_report(model, max_m);
    if (o.table) {
        std::printf("%6s %10s %14s %6s\n", "m", "q_m", "q_m/m", "sign");
        for (const auto& row : rep.rows)
            std::printf("%6ld %10s %14s %6d\n", row.m, row.q_m.get_str().c_str(),
                        to_string(row.ratio).c_str(), row.sign_vs_theta);
        std::printf("subadditive=%d ratio>=theta=%d |gap|<1/m=%d\n", rep.subadditive,
                    rep.ratio_above_theta, rep.within_inverse_m);
        return rep.pass() ? 0 : 2;
    }
    env.results() = to_json(rep);
    env.emit();
    return rep.pass() ? 0 : 2;
}

int run_abc(const CommonOpts& o, long d, long p, const std::string& alpha) {
    Envelope env("abc", o);
    env.inputs()["d"] = d;
    env.inputs()["p"] = p;
    FrobeniusIndex idx = frobenius_bc(Int(d), Int(p));
    AllowedFractions af = allowed_fractions(idx);
    env.results()["index"] = to_json(idx);
    Json fractions = Json::array();
    for (const auto& q : af.enumerate(16)) fractions.push_back(to_json(q));
    env.results()["fractions_preview"] = fractions;
    env.results()["modulus"] = af.modulus.get_str();
    if (!alpha.empty()) {
        env.inputs()["alpha"] = alpha;
        env.results()["alpha_allowed"] = af.contains(parse_rational(alpha));
    }
    env.emit();
    return 0;
}

int run_lattice_check(const CommonOpts& o, const std::string& cert_family, long target, long bound) {
    Envelope env("lattice-check", o);
    env.inputs()["target_square"] = target;
    env.inputs()["bound"] = bound;
    std::shared_ptr<const GramLattice> lattice;
    Json certs = Json::array();
    if (cert_family == "nd") {
        lattice = lattice_Nd(o.d == 1 ? 3 : o.d);
        certs.push_back(to_json(certificate_no_vectors(CertFamily::Nd, o.d == 1 ? 3 : o.d, target)));
    } else if (cert_family == "lambda") {
        lattice = lattice_Lambda(o.m);
        certs.push_back(to_json(certificate_no_vectors(CertFamily::Lambda, o.m, target)));
    } else if (!o.gram_file.empty()) {
        std::ifstream in(o.gram_file);
        if (!in) throw ParseError("cannot open " + o.gram_file);
        lattice = lattice_from_json(Json::parse(in));
    } else {
        throw ParseError("need --cert-family nd|lambda or --gram FILE");
    }
    auto vectors = search_vectors(lattice, target, bound);
    env.results()["vectors_found"] = vectors.size();
    Json sample = Json::array();
    for (size_t i = 0; i < vectors.size() && i < 16; ++i) sample.push_back(to_json(vectors[i]));
    env.results()["sample"] = sample;
    env.results()["certificates"] = certs;
    env.emit();
    return 0;
}

int run_construct(const CommonOpts& o, long bound) {
    Envelope env("construct", o);
    env.inputs()["g"] = o.g;
    env.inputs()["bound"] = bound;
    DegreeGConstruction built = construct_degree_g(o.g, bound);
    env.results()["a0"] = built.a0;
    env.results()["c"] = built.c;
    env.results()["n"] = built.n;
    env.results()["P"] = to_json(built.P);
    env.results()["Q"] = to_json(built.Q);
    env.results()["threshold"] = to_json(built.result, o.digits);
    env.emit();
    return 0;
}

int run_verify(const CommonOpts& o, bool all, const std::string& registry_file) {
    std::vector<FamilySpec> specs;
    if (!registry_file.empty()) {
        std::ifstream in(registry_file);
        if (!in) throw ParseError("cannot open " + registry_file);
        specs = registry_from_json(Json::parse(in));
    } else if (all) {
        specs = catalogue();
    } else {
        specs.push_back(family_from_opts(o));
    }
    Envelope env("verify", o);
    env.inputs()["count"] = specs.size();
    Json reports = Json::array();
    bool all_pass = true;
    std::string first_error;
    for (const auto& spec : specs) {
        try {
            VerifyReport rep = verify_family(spec, o.digits);
            all_pass = all_pass && rep.pass;
            reports.push_back(to_json(rep, o.digits));
        } catch (const ExpectedMismatch& e) {
            all_pass = false;
            if (first_error.empty()) first_error = e.what();
            Json fail;
            fail["family"] = spec.display;
            fail["error"] = e.what();
            fail["pass"] = false;
            reports.push_back(fail);
        }
    }
    env.results()["reports"] = reports;
    env.results()["all_pass"] = all_pass;
    if (o.table) {
        std::printf("%-24s %-16s %-6s\n", "family", "theta", "pass");
        for (const auto& r : reports)
            std::printf("%-24s %-16s %-6s\n", r["family"].get<std::string>().c_str(),
                        r.contains("threshold") ? r["threshold"]["decimal"].get<std::string>().substr(0, 14).c_str()
                                                : "-",
                        r["pass"].get<bool>() ? "ok" : "FAIL");
    } else {
        env.emit();
    }
    return all_pass ? 0 : 3;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact pseudo-effective thresholds, certificates, and cone ideal exponents"};
    app.require_subcommand(1);
    CommonOpts o;
    o.digits = default_digits();

    auto* cmd_threshold = app.add_subcommand("threshold", "compute theta(W, A) exactly");
    bool normalize = false;
    add_family_options(cmd_threshold, o);
    add_output_options(cmd_threshold, o);
    cmd_threshold->add_flag("--normalize", normalize, "rescale so that t0 < 1");

    auto* cmd_jumps = app.add_subcommand("jumps", "jumping numbers of the cone exponent in (from, to]");
    std::string from_text = "0", to_text = "3";
    add_family_options(cmd_jumps, o);
    add_output_options(cmd_jumps, o);
    cmd_jumps->add_option("--from", from_text, "lower bound (exclusive), rational");
    cmd_jumps->add_option("--to", to_text, "upper bound (inclusive), rational");

    auto* cmd_exponent = app.add_subcommand("exponent", "evaluate an exponent function");
    bool jm = false;
    long jm_m = 1, n_value = 0;
    std::string jm_qm = "0", gamma_s, t_text = "0", t_form;
    add_family_options(cmd_exponent, o, /*include_m=*/false, /*include_n=*/false);
    add_output_options(cmd_exponent, o);
    cmd_exponent->add_flag("--jm", jm, "m-th approximation exponent (needs --m, --qm)");
    cmd_exponent->add_option("--m", jm_m, "index m for --jm (or the k3-lambda parameter)");
    cmd_exponent->add_option("--qm", jm_qm, "q_m value for --jm");
    cmd_exponent->add_option("--gamma-s", gamma_s, "boundary parameter s for the auxiliary exponent");
    cmd_exponent->add_option("--t", t_text, "parameter: \"p/q\" or \"u+v*theta\"");
    cmd_exponent->add_option("--t-form", t_form, "symbolic form: n+kappa (with --n)");
    cmd_exponent->add_option("--n", n_value, "n for --t-form n+kappa (or the rm parameter)");

    auto* cmd_qm = app.add_subcommand("qm", "q_m sequence and its convergence report");
    long max_m = 50, single_m = 0;
    add_family_options(cmd_qm, o);
    add_output_options(cmd_qm, o);
    cmd_qm->add_option("--max-m", max_m, "table up to this m");
    cmd_qm->add_option("--single-m", single_m, "report a single q_m only");

    auto* cmd_abc = app.add_subcommand("abc", "Frobenius index b, c and the fraction lattice");
    long abc_d = 1, abc_p = 3;
    std::string abc_alpha;
    add_output_options(cmd_abc, o);
    cmd_abc->add_option("--d", abc_d, "divisibility target")->required();
    cmd_abc->add_option("--p", abc_p, "prime p")->required();
    cmd_abc->add_option("--alpha", abc_alpha, "test membership of a rational in A_{b,c}");

    auto* cmd_lattice = app.add_subcommand("lattice-check", "vector search plus nonexistence certificates");
    std::string cert_family;
    long target = -2, bound = 100;
    add_family_options(cmd_lattice, o);
    add_output_options(cmd_lattice, o);
    cmd_lattice->add_option("--cert-family", cert_family, "nd | lambda");
    cmd_lattice->add_option("--target", target, "target square (0 or -2)");
    cmd_lattice->add_option("--bound", bound, "coefficient box bound");

    auto* cmd_construct = app.add_subcommand("construct", "degree-g threshold construction on E^g");
    long search_bound = 50;
    add_family_options(cmd_construct, o);
    add_output_options(cmd_construct, o);
    cmd_construct->add_option("--bound", search_bound, "a0 scan bound");

    auto* cmd_verify = app.add_subcommand("verify", "recompute catalogue thresholds against closed forms");
    bool verify_all = false;
    std::string registry_file;
    add_family_options(cmd_verify, o);
    add_output_options(cmd_verify, o);
    cmd_verify->add_flag("--all", verify_all, "verify the whole built-in catalogue");
    cmd_verify->add_option("--registry", registry_file, "JSON array of user family specs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 64;
    }

    apply_config(o);

    if (cmd_threshold->parsed()) return run_threshold(o, normalize);
    if (cmd_jumps->parsed()) return run_jumps(o, from_text, to_text);
    if (cmd_exponent->parsed()) return run_exponent(o, jm, jm_m, jm_qm, gamma_s, t_text, t_form, n_value);
    if (cmd_qm->parsed()) return run_qm(o, max_m, single_m);
    if (cmd_abc->parsed()) return run_abc(o, abc_d, abc_p, abc_alpha);
    if (cmd_lattice->parsed()) return run_lattice_check(o, cert_family, target, bound);
    if (cmd_construct->parsed()) return run_construct(o, search_bound);
    if (cmd_verify->parsed()) return run_verify(o, verify_all, registry_file);
    return 64;
}

} // namespace

int main(int argc, char** argv) {
    static const std::set<std::string> usage_codes = {
        "ParseError",     "NotSymmetric",   "InvalidNumber", "LatticeMismatch",
        "WrongLatticeKind", "RankTooLarge", "DegreeTooLarge", "HypothesisViolated"};
    try {
        return dispatch(argc, argv);
    } catch (const ExpectedMismatch& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return usage_codes.count(e.code()) ? 64 : 2;
    } catch (const Json::exception& e) {
        std::cerr << "json: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 70;
    }
}
