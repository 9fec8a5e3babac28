#pragma once

#include <cstddef>
#include <string_view>

#include "clausen/params.hpp"

namespace clausen {

// The five weighted Pochhammer-quotient sums over n >= 0:
//   W0 <-> 1, W1 <-> (n+1), W2 <-> (n+1)^2, W3 <-> (n+1)^3, WInv <-> 1/(n+1),
// each applied to t_n = (alpha)_n (b)_n (c)_n / ((b+1)_n (c+1)_n (1)_n).
enum class Weight { W0, W1, W2, W3, WInv };

// The closed form exactly as displayed in the source text (printed) or as
// re-derived from the index-shift decomposition (derived). They differ only
// for W3.
enum class Variant { Printed, Derived };

struct WeightedSumSpec {
    Weight weight = Weight::W0;
    Variant variant = Variant::Derived;
};

// Polynomial degree of the weight: 0, 1, 2, 3, or -1 for 1/(n+1).
int weight_degree(Weight w);

double weight_value(Weight w, std::size_t n);

std::string_view weight_name(Weight w);
std::string_view variant_name(Variant v);

// Tail exponent sigma = alpha - 3 + deg(W); the weighted series converges
// iff sigma < -1. alpha is |a| in modulus mode and Re a in raw mode;
// terminating parameters are classified by the same rule (see the oracle
// for the finite-sum special case).
double convergence_exponent(const WeightedSumSpec& spec, const Params& p, AlphaMode mode);

// The z = 1 value of 3F2(alpha,b,c; b+1,c+1; z):
//   (bc/(c-b)) Gamma(1-alpha) [Gamma(b)/Gamma(1-alpha+b) - Gamma(c)/Gamma(1-alpha+c)]
// for alpha < 2, b, c > alpha - 1, b != c.
double miller_paris_value(const Params& p, AlphaMode mode);

// Closed form of the weighted sum for the requested variant. Throws
// divergent_sum_error outside the convergence domain unless force is set
// (forced values are analytic continuations, not sums).
double weighted_sum_closed(const WeightedSumSpec& spec, const Params& p,
                           AlphaMode mode, bool force = false);

// Ground-truth summation of the weighted series.
struct OracleResult {
    double value = 0.0;           // partial + tail estimate (exact when terminating)
    double abs_error_bound = 0.0; // 0 when exact
    std::size_t terms_used = 0;
    bool exact = false;           // terminating series summed in rational arithmetic
    bool divergent = false;
    bool growth_confirmed = false; // doubling-N growth test agreed
};

// Terminating parameters (raw non-positive-integer a) are summed exactly in
// rational arithmetic. Otherwise sums with compensated accumulation and a
// fitted power-law tail until the uncertainty falls below tol or n_cap is
// reached; sigma >= -1 inputs are classified divergent by the doubling-N
// growth test. Throws tolerance_unreachable_error when the cap is hit with
// sigma < -1 and the bound still above tol.
OracleResult weighted_sum_oracle(const WeightedSumSpec& spec, const Params& p,
                                 AlphaMode mode, double tol,
                                 std::size_t n_cap = 1000000);

namespace detail {

// Shared Gamma pieces of every Lemma bracket:
//   pref = bc/(c-b), gamma1 = Gamma(1-alpha),
//   gb = Gamma(b)/Gamma(1-alpha+b), gc = Gamma(c)/Gamma(1-alpha+c).
struct LemmaKernel {
    double alpha = 0.0;
    double b = 0.0;
    double c = 0.0;
    double pref = 0.0;
    double gamma1 = 0.0;
    double gb = 0.0;
    double gc = 0.0;

    // pref * gamma1 * [coef_b * gb - coef_c * gc]
    double bracket(double coef_b, double coef_c) const {
        return pref * gamma1 * (coef_b * gb - coef_c * gc);
    }
};

// Validates alpha < 2, b,c > alpha-1, |b-c| >= 1e-9, alpha away from 1,
// and fills the kernel.
LemmaKernel lemma_kernel(double alpha, double b, double c);

// Exact rational summation of a terminating weighted series; a must be a
// non-positive integer (within 1e-12).
OracleResult exact_terminating_sum(Weight w, double a, double b, double c);

} // namespace detail

} // namespace clausen
