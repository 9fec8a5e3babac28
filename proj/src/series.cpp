#include "clausen/series.hpp"

#include <algorithm>
#include <limits>

#include "clausen/summation.hpp"
#include "clausen/terms.hpp"

namespace clausen {

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.front() != cplx(1.0, 0.0))
        throw domain_violation_error("normalized series requires a_1 = 1");
}

TaylorSeries TaylorSeries::convolution_identity(std::size_t n) {
    if (n == 0) throw domain_violation_error("truncation must be >= 1");
    return TaylorSeries(std::vector<cplx>(n, cplx(1.0, 0.0)));
}

TaylorSeries hadamard_product(const TaylorSeries& f, const TaylorSeries& g) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    std::vector<cplx> coeffs(n);
    for (std::size_t k = 1; k <= n; ++k) coeffs[k - 1] = f.a(k) * g.a(k);
    return TaylorSeries(std::move(coeffs));
}

TaylorSeries hyp3f2_series(const Params& p, std::size_t n, AlphaMode mode) {
    if (n == 0) throw domain_violation_error("truncation must be >= 1");
    p.validate();
    const auto t = term_sequence(p, mode, n - 1);  // t_0 .. t_{n-1}
    std::vector<cplx> coeffs(n);
    for (std::size_t k = 1; k <= n; ++k) coeffs[k - 1] = t[k - 1];
    return TaylorSeries(std::move(coeffs));
}

TaylorSeries operator_coefficients(const Params& p, const TaylorSeries& f,
                                   std::size_t n) {
    p.validate();
    const std::size_t lim = std::min(n, f.truncation());
    if (lim == 0) throw domain_violation_error("truncation must be >= 1");
    ComplexTermRecurrence rec(p.a, p.b, p.c);  // t_0 = 1
    std::vector<cplx> coeffs(lim);
    for (std::size_t k = 1; k <= lim; ++k) {
        coeffs[k - 1] = rec.value() * f.a(k);  // t_{k-1} a_k
        rec.advance();
    }
    return TaylorSeries(std::move(coeffs));
}

CoefficientProfile CoefficientProfile::macgregor(double beta) {
    if (beta < 0.0 || !(beta < 1.0))
        throw domain_violation_error("beta must lie in [0, 1)");
    CoefficientProfile p(Kind::MacGregor);
    p.beta_ = beta;
    return p;
}

CoefficientProfile CoefficientProfile::exact(TaylorSeries series) {
    CoefficientProfile p(Kind::Exact);
    p.exact_ = series.coefficients();
    return p;
}

double CoefficientProfile::bound(std::size_t n) const {
    switch (kind_) {
        case Kind::Ones: return 1.0;
        case Kind::Univalent: return static_cast<double>(n);
        case Kind::MacGregor: return 2.0 * (1.0 - beta_) / static_cast<double>(n);
        case Kind::Exact:
            return n <= exact_.size() ? std::abs(exact_[n - 1]) : 0.0;
    }
    return 0.0;
}

int CoefficientProfile::degree() const {
    switch (kind_) {
        case Kind::Ones: return 0;
        case Kind::Univalent: return 1;
        case Kind::MacGregor: return -1;
        case Kind::Exact: return 0;  // finite support, no tail
    }
    return 0;
}

std::size_t CoefficientProfile::limit() const {
    return kind_ == Kind::Exact ? exact_.size() : std::numeric_limits<std::size_t>::max();
}

CoefficientSumResult weighted_coefficient_sum(const CoefficientProfile& profile,
                                              const Params& p,
                                              const WeightPoly& weight,
                                              std::size_t n_max) {
    p.validate();
    const double alpha = std::abs(p.a);
    const double sigma = alpha - 3.0 + weight.degree() + profile.degree();

    const std::size_t last = std::min(n_max, profile.limit());
    CoefficientSumResult out;
    out.tail_exponent = sigma;
    if (last < 2) return out;

    TermRecurrence rec(alpha, p.b, p.c);
    const auto f = [&](std::size_t n) {
        while (rec.index() < n - 1) rec.advance();  // t_{n-1}
        return weight(n) * profile.bound(n) * rec.value();
    };

    const bool finite = profile.kind() == CoefficientProfile::Kind::Exact;
    const auto r = sum_series_fixed(f, 2, finite ? -2.0 : sigma, last);
    out.partial = r.partial;
    out.terms = r.terms;
    if (finite) return out;  // whole support covered, no tail
    out.tail_estimate = r.tail;
    out.tail_error_bound = r.bound;
    out.divergent = r.divergent;
    return out;
}

} // namespace clausen
