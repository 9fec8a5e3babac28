// Batch front end: lemma verification runs, single criterion checks,
// parameter-region sweeps, and unit-disc falsification runs, with CSV or
// JSON emission.
//
// Exit codes: 0 success, 1 audit failure, 2 invalid input, 3 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clausen/closed_forms.hpp"
#include "clausen/criteria.hpp"
#include "clausen/disc.hpp"
#include "clausen/report.hpp"
#include "clausen/series.hpp"

namespace {

using namespace clausen;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIo = 3;

Range parse_range(const std::string& text) {
    Range r;
    const auto first = text.find(':');
    if (first == std::string::npos) {
        r.min = r.max = std::stod(text);
        r.steps = 1;
        return r;
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos)
        throw invalid_range_error("range must be value or min:max:steps: " + text);
    r.min = std::stod(text.substr(0, first));
    r.max = std::stod(text.substr(first + 1, second - first - 1));
    const long steps = std::stol(text.substr(second + 1));
    if (steps < 1) throw invalid_range_error("steps must be >= 1: " + text);
    r.steps = static_cast<std::size_t>(steps);
    return r;
}

std::vector<double> range_values(const Range& r) {
    r.validate("range");
    std::vector<double> out(r.steps);
    for (std::size_t i = 0; i < r.steps; ++i) out[i] = r.at(i);
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

Weight parse_weight(const std::string& name) {
    for (Weight w : {Weight::W0, Weight::W1, Weight::W2, Weight::W3, Weight::WInv})
        if (weight_name(w) == name) return w;
    throw invalid_range_error("unknown part: " + name + " (use W0 W1 W2 W3 WInv)");
}

struct CommonPoint {
    double a_re = 0.3;
    double a_im = 0.0;
    double b = 2.0;
    double c = 3.0;
    double lambda = 1.0;
    double beta = 0.0;
};

void add_point_flags(CLI::App* cmd, CommonPoint& pt) {
    cmd->add_option("--a-re", pt.a_re, "Re a");
    cmd->add_option("--a-im", pt.a_im, "Im a");
    cmd->add_option("--b", pt.b, "parameter b (> 0)");
    cmd->add_option("--c", pt.c, "parameter c (> 0)");
    cmd->add_option("--lambda", pt.lambda, "class parameter lambda in (0, 1]");
    cmd->add_option("--beta", pt.beta, "class parameter beta in [0, 1)");
}

int run_verify_lemma_cmd(const std::vector<std::string>& parts_arg,
                         const std::string& variant_arg,
                         const std::vector<std::string>& a_args,
                         const std::vector<std::string>& b_args,
                         const std::vector<std::string>& c_args, double tol,
                         std::size_t n_max, bool force_partial,
                         const std::string& out_path, const std::string& format) {
    std::vector<Weight> parts;
    if (parts_arg.empty()) {
        parts = {Weight::W0, Weight::W1, Weight::W2, Weight::W3, Weight::WInv};
    } else {
        for (const auto& s : parts_arg) parts.push_back(parse_weight(s));
    }

    std::vector<Variant> variants;
    if (variant_arg == "derived")
        variants = {Variant::Derived};
    else if (variant_arg == "printed")
        variants = {Variant::Printed};
    else if (variant_arg == "both")
        variants = {Variant::Derived, Variant::Printed};
    else
        throw invalid_range_error("unknown variant: " + variant_arg);

    const auto collect = [](const std::vector<std::string>& args,
                            double fallback) -> std::vector<double> {
        if (args.empty()) return {fallback};
        std::vector<double> vals;
        for (const auto& s : args)
            for (double v : range_values(parse_range(s))) vals.push_back(v);
        return vals;
    };
    const auto a_vals = collect(a_args, -1.0);
    const auto b_vals = collect(b_args, 2.0);
    const auto c_vals = collect(c_args, 3.0);

    std::vector<LemmaPlanPoint> plan;
    for (Weight w : parts)
        for (Variant v : variants)
            for (double a : a_vals)
                for (double b : b_vals)
                    for (double c : c_vals) plan.push_back({{w, v}, a, b, c});

    VerifyLemmaOptions options;
    options.tol = tol;
    options.n_cap = n_max;
    options.force_partial = force_partial;

    const auto result = run_verify_lemma(plan, options);
    emit(format == "json" ? to_json(result.rows) : to_csv(result.rows), out_path);
    return result.audit_failures > 0 ? kExitAuditFailure : kExitOk;
}

int run_check_cmd(const std::string& theorem_arg, const CommonPoint& pt,
                  const std::string& out_path, const std::string& format) {
    const auto id = theorem_from_name(theorem_arg);
    if (!id) throw invalid_range_error("unknown theorem: " + theorem_arg);

    ScanRow row;
    row.theorem = theorem_arg;
    row.a_re = pt.a_re;
    row.a_im = pt.a_im;
    row.b = pt.b;
    row.c = pt.c;
    row.lambda = pt.lambda;
    row.beta = pt.beta;
    row.status = "OK";
    std::string verdict = "?";
    std::string notes;
    double printed_lhs = std::nan("");
    try {
        const Params p(cplx(pt.a_re, pt.a_im), pt.b, pt.c);
        const ClassParams cp{pt.lambda, pt.beta};
        const auto rep = criterion(*id, p, cp);
        row.premise_exponent = rep.premise_exponent;
        row.convergent = rep.premise_convergent;
        if (std::isfinite(rep.lhs)) row.lhs = rep.lhs;
        if (std::isfinite(rep.rhs)) row.rhs = rep.rhs;
        row.holds = rep.holds;
        row.printed_matches_derived = rep.printed_matches_derived;
        if (rep.verdict == Verdict::DivergentPremise) row.status = "DivergentPremise";
        verdict = std::string(verdict_name(rep.verdict));
        notes = rep.notes;
        printed_lhs = rep.printed_lhs;
    } catch (const near_pole_error& e) {
        row.status = "NearPole";
        notes = e.what();
    } catch (const pole_argument_error& e) {
        row.status = "NearPole";
        notes = e.what();
    } catch (const degenerate_parameters_error& e) {
        row.status = "DegenerateParameters";
        notes = e.what();
    } catch (const domain_violation_error& e) {
        row.status = "DomainViolation";
        notes = e.what();
    }

    if (format == "csv") {
        emit(to_csv(std::vector<ScanRow>{row}), out_path);
    } else if (format == "json") {
        emit(to_json(std::vector<ScanRow>{row}), out_path);
    } else {
        std::ostringstream text;
        text << "theorem:                 " << row.theorem << '\n'
             << "status:                  " << row.status << '\n'
             << "verdict:                 " << verdict << '\n'
             << "premise_exponent:        "
             << (row.premise_exponent ? format_double(*row.premise_exponent) : "-") << '\n'
             << "premise_convergent:      "
             << (row.convergent ? (*row.convergent ? "true" : "false") : "-") << '\n'
             << "lhs (derived):           " << (row.lhs ? format_double(*row.lhs) : "-")
             << '\n'
             << "rhs:                     " << (row.rhs ? format_double(*row.rhs) : "-")
             << '\n'
             << "printed lhs:             "
             << (std::isfinite(printed_lhs) ? format_double(printed_lhs) : "-") << '\n'
             << "printed_matches_derived: "
             << (row.printed_matches_derived
                     ? (*row.printed_matches_derived ? "true" : "false")
                     : "-")
             << '\n';
        if (!notes.empty()) text << "notes:                   " << notes << '\n';
        emit(text.str(), out_path);
    }
    return kExitOk;
}

int run_scan_cmd(const std::vector<std::string>& theorem_args,
                 const std::string& a_range, const std::string& b_range,
                 const std::string& c_range, const std::string& lambda_range,
                 const std::string& beta_range, double printed_match_tol,
                 const std::string& out_path, const std::string& format) {
    ScanSpec spec;
    spec.a_abs = parse_range(a_range);
    spec.b = parse_range(b_range);
    spec.c = parse_range(c_range);
    spec.lambda = parse_range(lambda_range);
    spec.beta = parse_range(beta_range);
    spec.printed_match_tol = printed_match_tol;
    if (theorem_args.empty()) {
        spec.theorems = all_theorems();
    } else {
        for (const auto& s : theorem_args) {
            const auto id = theorem_from_name(s);
            if (!id) throw invalid_range_error("unknown theorem: " + s);
            spec.theorems.push_back(*id);
        }
    }
    const auto rows = run_scan(spec);
    emit(format == "json" ? to_json(rows) : to_csv(rows), out_path);
    return kExitOk;
}

int run_disc_cmd(const std::string& class_arg, const CommonPoint& pt,
                 std::size_t n_max, double r_max, std::size_t n_radii,
                 std::size_t angles, const std::string& out_path,
                 const std::string& format) {
    GeometricClass cls;
    if (class_arg == "starlike")
        cls = GeometricClass::StarlikeLambda;
    else if (class_arg == "convex")
        cls = GeometricClass::ConvexLambda;
    else if (class_arg == "ucv")
        cls = GeometricClass::UCV;
    else if (class_arg == "sp")
        cls = GeometricClass::Sp;
    else
        throw invalid_range_error("unknown class: " + class_arg +
                                  " (use starlike convex ucv sp)");

    const Params p(cplx(pt.a_re, pt.a_im), pt.b, pt.c);
    const ClassParams cp{pt.lambda, pt.beta};
    const auto f = hyp3f2_series(p, n_max, AlphaMode::Raw);
    // Modulus-mode terms bound the dropped coefficients for the tail report.
    const Params p_mod(std::abs(p.a), p.b, p.c);
    const auto profile =
        CoefficientProfile::exact(hyp3f2_series(p_mod, n_max + 4000, AlphaMode::Raw));
    const auto grid = DiscGrid::uniform(n_radii, r_max, angles);
    const auto rep = class_margin(cls, f, grid, cp, &profile);

    std::ostringstream csv;
    csv << "class,a_re,a_im,b,c,lambda,n,r_max,angles,min_margin,argmin_r,"
           "argmin_theta,truncation_bound,skipped\n"
        << class_arg << ',' << format_double(pt.a_re) << ',' << format_double(pt.a_im)
        << ',' << format_double(pt.b) << ',' << format_double(pt.c) << ','
        << format_double(pt.lambda) << ',' << n_max << ',' << format_double(r_max)
        << ',' << angles << ',' << format_double(rep.min_margin) << ','
        << format_double(rep.argmin_r) << ',' << format_double(rep.argmin_theta) << ','
        << format_double(rep.truncation_bound) << ',' << rep.skipped_points << '\n';

    if (format == "json") {
        nlohmann::json obj = {{"class", class_arg},
                              {"a_re", pt.a_re},
                              {"a_im", pt.a_im},
                              {"b", pt.b},
                              {"c", pt.c},
                              {"lambda", pt.lambda},
                              {"n", n_max},
                              {"r_max", r_max},
                              {"angles", angles},
                              {"min_margin", rep.min_margin},
                              {"argmin_r", rep.argmin_r},
                              {"argmin_theta", rep.argmin_theta},
                              {"truncation_bound", rep.truncation_bound},
                              {"skipped", rep.skipped_points}};
        emit(nlohmann::json::array({obj}).dump(2) + "\n", out_path);
    } else {
        emit(csv.str(), out_path);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clausen 3F2(a,b,c;b+1,c+1;.) closed forms, sufficient-condition "
                 "criteria, and disc falsification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from a config file (flags win)");

    std::string out_path;
    std::string format = "csv";
    app.add_option("--out", out_path, "output file (stdout when omitted)")
        ->configurable(true);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->configurable(true);

    // verify-lemma
    auto* lemma = app.add_subcommand(
        "verify-lemma", "audit the weighted-sum closed forms against the oracle");
    std::vector<std::string> lemma_parts, lemma_a, lemma_b, lemma_c;
    std::string lemma_variant = "both";
    double lemma_tol = 1e-9;
    std::size_t lemma_ncap = 1000000;
    bool force_partial = false;
    lemma->add_option("--part", lemma_parts, "parts to audit (W0 W1 W2 W3 WInv)");
    lemma->add_option("--variant", lemma_variant, "printed | derived | both");
    lemma->add_option("--a", lemma_a, "a values, each value or min:max:steps");
    lemma->add_option("--b", lemma_b, "b values, each value or min:max:steps");
    lemma->add_option("--c", lemma_c, "c values, each value or min:max:steps");
    lemma->add_option("--tol", lemma_tol, "audit tolerance");
    lemma->add_option("--n-max", lemma_ncap, "series cap for the oracle");
    lemma->add_flag("--force-partial", force_partial,
                    "evaluate closed forms and partial sums outside the domain");

    // check
    auto* check = app.add_subcommand("check", "evaluate a single criterion");
    std::string check_theorem;
    CommonPoint check_pt;
    check->add_option("--theorem", check_theorem, "ST1..SP3")->required();
    add_point_flags(check, check_pt);

    // scan
    auto* scan = app.add_subcommand("scan", "sweep criteria over a parameter grid");
    std::vector<std::string> scan_theorems;
    std::string a_range = "0.3", b_range = "2", c_range = "3";
    std::string lambda_range = "1", beta_range = "0";
    double scan_tol = 1e-9;
    scan->add_option("--theorem", scan_theorems, "theorems (default: all twelve)");
    scan->add_option("--a-range", a_range, "|a| range value or min:max:steps");
    scan->add_option("--b-range", b_range, "b range");
    scan->add_option("--c-range", c_range, "c range");
    scan->add_option("--lambda-range", lambda_range, "lambda range");
    scan->add_option("--beta-range", beta_range, "beta range");
    scan->add_option("--tol", scan_tol,
                     "relative tolerance for printed_matches_derived");

    // disc-test
    auto* disc = app.add_subcommand(
        "disc-test", "minimum class margin of the z*3F2 truncation on a disc grid");
    std::string disc_class = "starlike";
    CommonPoint disc_pt;
    std::size_t disc_n = 200, disc_radii = 20, disc_angles = 720;
    double disc_rmax = 0.99;
    disc->add_option("--class", disc_class, "starlike | convex | ucv | sp");
    add_point_flags(disc, disc_pt);
    disc->add_option("--n-max", disc_n, "series truncation degree");
    disc->add_option("--r-max", disc_rmax, "largest sampled radius (<= 0.999)");
    disc->add_option("--radii", disc_radii, "number of radii");
    disc->add_option("--angles", disc_angles, "number of angles (>= 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (lemma->parsed())
            return run_verify_lemma_cmd(lemma_parts, lemma_variant, lemma_a, lemma_b,
                                        lemma_c, lemma_tol, lemma_ncap, force_partial,
                                        out_path, format);
        if (check->parsed())
            return run_check_cmd(check_theorem, check_pt, out_path,
                                 app.count("--format") > 0 ? format : "text");
        if (scan->parsed())
            return run_scan_cmd(scan_theorems, a_range, b_range, c_range, lambda_range,
                                beta_range, scan_tol, out_path, format);
        if (disc->parsed())
            return run_disc_cmd(disc_class, disc_pt, disc_n, disc_rmax, disc_radii,
                                disc_angles, out_path, format);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}
