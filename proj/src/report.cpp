#include "clausen/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace clausen {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string cell(const std::optional<bool>& v) {
    if (!v) return {};
    return *v ? "true" : "false";
}

std::string cell(bool v) { return v ? "true" : "false"; }

nlohmann::json jcell(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

nlohmann::json jcell(const std::optional<bool>& v) {
    if (!v) return nullptr;
    return *v;
}

} // namespace

VerifyLemmaResult run_verify_lemma(const std::vector<LemmaPlanPoint>& plan,
                                   const VerifyLemmaOptions& options) {
    if (plan.empty()) throw empty_plan_error("verify-lemma plan is empty");

    VerifyLemmaResult result;
    result.rows.resize(plan.size());

    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto& pt = plan[i];
        LemmaRow row;
        row.part = std::string(weight_name(pt.spec.weight));
        row.variant = std::string(variant_name(pt.spec.variant));
        row.a = pt.a;
        row.b = pt.b;
        row.c = pt.c;
        row.status = "OK";

        const Params p(pt.a, pt.b, pt.c);
        try {
            const double sigma = convergence_exponent(pt.spec, p, AlphaMode::Raw);
            const bool terminating = is_terminating(p, AlphaMode::Raw);
            // The sum converges when finite or sigma < -1; the identity is
            // only in domain for sigma < -1 (terminating sums on the
            // boundary are finite yet the closed form continues past them).
            row.convergent = sigma < -1.0 || terminating;
            const bool identity_valid = sigma < -1.0;
            if (!identity_valid) row.status = "DivergentSum";

            const auto oracle =
                weighted_sum_oracle(pt.spec, p, AlphaMode::Raw, options.tol, options.n_cap);
            row.exact = oracle.exact;
            if (!oracle.divergent || options.force_partial)
                row.oracle = oracle.value;
            if (oracle.divergent) row.convergent = false;

            if (identity_valid || options.force_partial) {
                const double closed =
                    weighted_sum_closed(pt.spec, p, AlphaMode::Raw, options.force_partial);
                row.closed = closed;
                if (row.oracle) {
                    row.abs_err = std::abs(closed - *row.oracle);
                    row.rel_err =
                        *row.abs_err / std::max(std::abs(*row.oracle), 1e-300);
                    const bool over_tol =
                        *row.abs_err >
                        std::max(options.tol * std::abs(*row.oracle), options.tol);
                    // Only identity-valid rows are audit material; printed
                    // mismatches are flagged but never fail the audit.
                    if (identity_valid && over_tol) {
                        row.flagged = true;
                        if (pt.spec.variant == Variant::Derived) ++result.audit_failures;
                    }
                }
            }
        } catch (const near_pole_error&) {
            row.status = "NearPole";
        } catch (const pole_argument_error&) {
            row.status = "NearPole";
        } catch (const degenerate_parameters_error&) {
            row.status = "DegenerateParameters";
        } catch (const domain_violation_error&) {
            row.status = "DomainViolation";
        } catch (const tolerance_unreachable_error&) {
            row.status = "ToleranceUnreachable";
        }
        result.rows[i] = std::move(row);
    }
    return result;
}

std::string to_csv(const std::vector<LemmaRow>& rows) {
    std::ostringstream out;
    out << "part,variant,a,b,c,closed,oracle,abs_err,rel_err,convergent,exact\n";
    for (const auto& r : rows) {
        out << r.part << ',' << r.variant << ',' << format_double(r.a) << ','
            << format_double(r.b) << ',' << format_double(r.c) << ','
            << cell(r.closed) << ',' << cell(r.oracle) << ',' << cell(r.abs_err)
            << ',' << cell(r.rel_err) << ',' << cell(r.convergent) << ','
            << cell(r.exact) << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<LemmaRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"part", r.part},
                       {"variant", r.variant},
                       {"a", r.a},
                       {"b", r.b},
                       {"c", r.c},
                       {"closed", jcell(r.closed)},
                       {"oracle", jcell(r.oracle)},
                       {"abs_err", jcell(r.abs_err)},
                       {"rel_err", jcell(r.rel_err)},
                       {"convergent", r.convergent},
                       {"exact", r.exact},
                       {"status", r.status},
                       {"flagged", r.flagged}});
    }
    return arr.dump(2) + "\n";
}

void Range::validate(const char* name) const {
    if (steps < 1) throw invalid_range_error(std::string(name) + ": steps must be >= 1");
    if (!(min <= max)) throw invalid_range_error(std::string(name) + ": min > max");
    if (!std::isfinite(min) || !std::isfinite(max))
        throw invalid_range_error(std::string(name) + ": non-finite bound");
}

double Range::at(std::size_t i) const {
    if (steps == 1) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
    spec.a_abs.validate("a");
    spec.b.validate("b");
    spec.c.validate("c");
    spec.lambda.validate("lambda");
    spec.beta.validate("beta");
    if (spec.theorems.empty()) throw empty_plan_error("scan selects no theorems");

    struct Point {
        TheoremId id;
        double a, b, c, lambda, beta;
    };
    std::vector<Point> points;
    points.reserve(spec.theorems.size() * spec.a_abs.steps * spec.b.steps *
                   spec.c.steps * spec.lambda.steps * spec.beta.steps);
    for (TheoremId id : spec.theorems)
        for (std::size_t ia = 0; ia < spec.a_abs.steps; ++ia)
            for (std::size_t ib = 0; ib < spec.b.steps; ++ib)
                for (std::size_t ic = 0; ic < spec.c.steps; ++ic)
                    for (std::size_t il = 0; il < spec.lambda.steps; ++il)
                        for (std::size_t ie = 0; ie < spec.beta.steps; ++ie)
                            points.push_back({id, spec.a_abs.at(ia), spec.b.at(ib),
                                              spec.c.at(ic), spec.lambda.at(il),
                                              spec.beta.at(ie)});

    std::vector<ScanRow> rows(points.size());

    const auto evaluate = [&](std::size_t i) {
        const Point& pt = points[i];
        ScanRow row;
        row.theorem = std::string(theorem_name(pt.id));
        row.a_re = pt.a;
        row.a_im = 0.0;
        row.b = pt.b;
        row.c = pt.c;
        row.lambda = pt.lambda;
        row.beta = pt.beta;
        row.status = "OK";
        // The exponent classification is well defined even where the
        // closed forms are not evaluable; fill it up front.
        row.premise_exponent =
            pt.a - 3.0 + static_cast<double>(premise_degree(pt.id));
        row.convergent = *row.premise_exponent < -1.0;
        try {
            const Params p(pt.a, pt.b, pt.c);
            const ClassParams cp{pt.lambda, pt.beta};
            const CriterionReport rep = criterion(pt.id, p, cp);
            row.premise_exponent = rep.premise_exponent;
            row.convergent = rep.premise_convergent;
            if (std::isfinite(rep.lhs)) row.lhs = rep.lhs;
            if (std::isfinite(rep.rhs)) row.rhs = rep.rhs;
            row.holds = rep.holds;
            row.printed_matches_derived = rep.printed_matches_derived;
            if (std::isfinite(rep.lhs) && std::isfinite(rep.printed_lhs))
                row.printed_matches_derived =
                    std::abs(rep.printed_lhs - rep.lhs) <=
                    spec.printed_match_tol *
                        std::max({1.0, std::abs(rep.lhs), std::abs(rep.printed_lhs)});
            if (rep.verdict == Verdict::DivergentPremise) row.status = "DivergentPremise";
        } catch (const near_pole_error&) {
            row.status = "NearPole";
        } catch (const pole_argument_error&) {
            row.status = "NearPole";
        } catch (const degenerate_parameters_error&) {
            row.status = "DegenerateParameters";
        } catch (const domain_violation_error&) {
            row.status = "DomainViolation";
        }
        rows[i] = std::move(row);
    };

    // Independent points: evaluate concurrently, assemble by index.
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
    if (workers <= 1 || points.size() < 64) {
        for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < points.size();
                     i = next.fetch_add(1))
                    evaluate(i);
            });
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::string to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "theorem,a_re,a_im,b,c,lambda,beta,premise_exponent,convergent,lhs,rhs,"
           "holds,printed_matches_derived,status\n";
    for (const auto& r : rows) {
        out << r.theorem << ',' << format_double(r.a_re) << ','
            << format_double(r.a_im) << ',' << format_double(r.b) << ','
            << format_double(r.c) << ',' << format_double(r.lambda) << ','
            << format_double(r.beta) << ',' << cell(r.premise_exponent) << ','
            << cell(r.convergent) << ',' << cell(r.lhs) << ',' << cell(r.rhs) << ','
            << cell(r.holds) << ',' << cell(r.printed_matches_derived) << ','
            << r.status << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<ScanRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"theorem", r.theorem},
                       {"a_re", r.a_re},
                       {"a_im", r.a_im},
                       {"b", r.b},
                       {"c", r.c},
                       {"lambda", r.lambda},
                       {"beta", r.beta},
                       {"premise_exponent", jcell(r.premise_exponent)},
                       {"convergent", jcell(r.convergent)},
                       {"lhs", jcell(r.lhs)},
                       {"rhs", jcell(r.rhs)},
                       {"holds", jcell(r.holds)},
                       {"printed_matches_derived", jcell(r.printed_matches_derived)},
                       {"status", r.status}});
    }
    return arr.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

} // namespace clausen
