#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clausen/closed_forms.hpp"
#include "clausen/criteria.hpp"
#include "clausen/params.hpp"

namespace clausen {

// Output file could not be written.
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

enum class OutputFormat { Csv, Json };

// Shortest round-trip decimal representation; identical input bits always
// produce identical text, which keeps re-runs byte-reproducible.
std::string format_double(double v);

// ---- verify-lemma ----------------------------------------------------

struct LemmaPlanPoint {
    WeightedSumSpec spec;
    double a = 0.0;  // raw real a
    double b = 0.0;
    double c = 0.0;
};

struct LemmaRow {
    std::string part;
    std::string variant;
    double a = 0.0, b = 0.0, c = 0.0;
    std::optional<double> closed;
    std::optional<double> oracle;
    std::optional<double> abs_err;
    std::optional<double> rel_err;
    bool convergent = false;  // the weighted sum converges (finite or sigma < -1)
    bool exact = false;
    std::string status;       // OK or the error/verdict that blocked the row
    bool flagged = false;     // convergent derived row exceeding tolerance
};

struct VerifyLemmaOptions {
    double tol = 1e-9;
    std::size_t n_cap = 1000000;
    bool force_partial = false;
};

struct VerifyLemmaResult {
    std::vector<LemmaRow> rows;
    std::size_t audit_failures = 0;  // number of flagged rows
};

// One row per plan point; throws empty_plan_error on an empty plan.
VerifyLemmaResult run_verify_lemma(const std::vector<LemmaPlanPoint>& plan,
                                   const VerifyLemmaOptions& options);

std::string to_csv(const std::vector<LemmaRow>& rows);
std::string to_json(const std::vector<LemmaRow>& rows);

// ---- scan ------------------------------------------------------------

struct Range {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 1;

    void validate(const char* name) const;
    double at(std::size_t i) const;
};

struct ScanSpec {
    Range a_abs;    // |a|; rows carry a_re = |a|, a_im = 0
    Range b;
    Range c;
    Range lambda{1.0, 1.0, 1};
    Range beta{0.0, 0.0, 1};
    std::vector<TheoremId> theorems;
    // Relative tolerance for the printed-vs-derived comparison column.
    double printed_match_tol = 1e-9;
};

struct ScanRow {
    std::string theorem;
    double a_re = 0.0, a_im = 0.0, b = 0.0, c = 0.0, lambda = 1.0, beta = 0.0;
    std::optional<double> premise_exponent;
    std::optional<bool> convergent;
    std::optional<double> lhs;
    std::optional<double> rhs;
    std::optional<bool> holds;
    std::optional<bool> printed_matches_derived;
    std::string status;
};

// Cartesian product of the ranges for each selected theorem, evaluated
// concurrently but emitted in deterministic grid order
// (theorem, |a|, b, c, lambda, beta).
std::vector<ScanRow> run_scan(const ScanSpec& spec);

std::string to_csv(const std::vector<ScanRow>& rows);
std::string to_json(const std::vector<ScanRow>& rows);

// ---- shared ----------------------------------------------------------

void write_text_file(const std::string& path, const std::string& content);

} // namespace clausen
