#include "clausen/closed_forms.hpp"

#include <cmath>

#include "clausen/gamma.hpp"
#include "clausen/summation.hpp"
#include "clausen/terms.hpp"

namespace clausen {

int weight_degree(Weight w) {
    switch (w) {
        case Weight::W0: return 0;
        case Weight::W1: return 1;
        case Weight::W2: return 2;
        case Weight::W3: return 3;
        case Weight::WInv: return -1;
    }
    return 0;
}

double weight_value(Weight w, std::size_t n) {
    const double m = static_cast<double>(n) + 1.0;
    switch (w) {
        case Weight::W0: return 1.0;
        case Weight::W1: return m;
        case Weight::W2: return m * m;
        case Weight::W3: return m * m * m;
        case Weight::WInv: return 1.0 / m;
    }
    return 1.0;
}

std::string_view weight_name(Weight w) {
    switch (w) {
        case Weight::W0: return "W0";
        case Weight::W1: return "W1";
        case Weight::W2: return "W2";
        case Weight::W3: return "W3";
        case Weight::WInv: return "WInv";
    }
    return "?";
}

std::string_view variant_name(Variant v) {
    return v == Variant::Printed ? "printed" : "derived";
}

double convergence_exponent(const WeightedSumSpec& spec, const Params& p, AlphaMode mode) {
    if (!(p.b > 0.0) || !(p.c > 0.0))
        throw domain_violation_error("convergence_exponent requires b, c > 0");
    const double alpha =
        mode == AlphaMode::Modulus ? std::abs(p.a) : p.a.real();
    return alpha - 3.0 + static_cast<double>(weight_degree(spec.weight));
}

namespace detail {

LemmaKernel lemma_kernel(double alpha, double b, double c) {
    if (!(b > 0.0) || !(c > 0.0))
        throw domain_violation_error("closed form requires b, c > 0");
    if (std::abs(b - c) < kDegenerateTol)
        throw degenerate_parameters_error("closed form requires b != c");
    if (!(alpha < 2.0 - kPoleTol))
        throw domain_violation_error("closed form requires alpha < 2");
    if (!(b > alpha - 1.0) || !(c > alpha - 1.0))
        throw domain_violation_error("closed form requires b, c > alpha - 1");
    if (std::abs(alpha - 1.0) < kPoleTol)
        throw near_pole_error("Gamma(1-alpha) pole at alpha = 1");

    LemmaKernel k;
    k.alpha = alpha;
    k.b = b;
    k.c = c;
    k.pref = b * c / (c - b);
    k.gamma1 = gamma(1.0 - alpha);
    k.gb = gamma(b) / gamma(1.0 - alpha + b);
    k.gc = gamma(c) / gamma(1.0 - alpha + c);
    return k;
}

namespace {

double winv_closed(const LemmaKernel& k) {
    // bc/((alpha-1)(b-1)(c-1)) *
    //   [ Gamma(2-alpha)/(c-b) ((c-1) gb - (b-1) gc) - 1 ]
    if (std::abs(k.b - 1.0) < kDegenerateTol || std::abs(k.c - 1.0) < kDegenerateTol)
        throw degenerate_parameters_error("the 1/(n+1)-weighted form requires b, c != 1");
    const double pre = k.b * k.c / ((k.alpha - 1.0) * (k.b - 1.0) * (k.c - 1.0));
    const double inner = gamma(2.0 - k.alpha) / (k.c - k.b) *
                         ((k.c - 1.0) * k.gb - (k.b - 1.0) * k.gc);
    return pre * (inner - 1.0);
}

} // namespace

} // namespace detail

double miller_paris_value(const Params& p, AlphaMode mode) {
    p.validate();
    const auto k = detail::lemma_kernel(p.alpha(mode), p.b, p.c);
    return k.bracket(1.0, 1.0);
}

double weighted_sum_closed(const WeightedSumSpec& spec, const Params& p,
                           AlphaMode mode, bool force) {
    p.validate();
    const double sigma = convergence_exponent(spec, p, mode);
    if (sigma >= -1.0 && !force)
        throw divergent_sum_error("weighted series diverges (sigma >= -1); "
                                  "pass force to inspect the continuation");

    const auto k = detail::lemma_kernel(p.alpha(mode), p.b, p.c);
    const double b = k.b, c = k.c;
    switch (spec.weight) {
        case Weight::W0:
            return k.bracket(1.0, 1.0);
        case Weight::W1:
            return k.bracket(1.0 - b, 1.0 - c);
        case Weight::W2:
            return k.bracket((1.0 - b) * (1.0 - b), (1.0 - c) * (1.0 - c));
        case Weight::W3: {
            const double cb = (1.0 - b) * (1.0 - b) * (1.0 - b);
            const double cc = (1.0 - c) * (1.0 - c) * (1.0 - c);
            if (spec.variant == Variant::Printed)
                return k.bracket(cb - b * b, cc - c * c);
            return k.bracket(cb, cc);
        }
        case Weight::WInv:
            // The 1/(alpha-1) pole coincides with the alpha = 1 check in
            // lemma_kernel.
            return detail::winv_closed(k);
    }
    throw domain_violation_error("unknown weight");
}

OracleResult weighted_sum_oracle(const WeightedSumSpec& spec, const Params& p,
                                 AlphaMode mode, double tol, std::size_t n_cap) {
    p.validate();
    if (is_terminating(p, mode))
        return detail::exact_terminating_sum(spec.weight, std::round(p.a.real()), p.b, p.c);

    const double alpha = p.alpha(mode);
    const double sigma = convergence_exponent(spec, p, mode);
    TermRecurrence rec(alpha, p.b, p.c);
    const auto f = [&](std::size_t n) {
        while (rec.index() < n) rec.advance();
        return weight_value(spec.weight, n) * rec.value();
    };

    const auto r = sum_series(f, 0, sigma, tol, n_cap);
    OracleResult out;
    out.value = r.value();
    out.abs_error_bound = r.bound;
    out.terms_used = r.terms;
    out.divergent = r.divergent;
    out.growth_confirmed = r.growth_confirmed;
    if (!r.divergent && !r.tolerance_met)
        throw tolerance_unreachable_error("series cap reached before the tail bound met tol");
    return out;
}

} // namespace clausen
