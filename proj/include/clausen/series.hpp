#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "clausen/params.hpp"

namespace clausen {

// Normalized analytic function f(z) = z + sum_{n>=2} a_n z^n, truncated at
// degree N; coefficients indexed from a_1 = 1.
class TaylorSeries {
public:
    // coeffs[i] is a_{i+1}; coeffs[0] must be 1.
    explicit TaylorSeries(std::vector<cplx> coeffs);

    // f(z) = z.
    static TaylorSeries linear() { return TaylorSeries({cplx(1.0, 0.0)}); }

    // Truncation of z/(1-z), the identity for the Hadamard product.
    static TaylorSeries convolution_identity(std::size_t n);

    std::size_t truncation() const { return coeffs_.size(); }

    // a_n, 1 <= n <= truncation().
    cplx a(std::size_t n) const { return coeffs_[n - 1]; }

    const std::vector<cplx>& coefficients() const { return coeffs_; }

private:
    std::vector<cplx> coeffs_;
};

// Coefficient-wise product up to the smaller truncation.
TaylorSeries hadamard_product(const TaylorSeries& f, const TaylorSeries& g);

// Taylor series of z * 3F2(a,b,c; b+1,c+1; z) truncated at degree n:
// a_1 = 1, a_k = t_{k-1}.
TaylorSeries hyp3f2_series(const Params& p, std::size_t n,
                           AlphaMode mode = AlphaMode::Raw);

// The operator f |-> z 3F2 * f: A_1 = 1, A_n = t_{n-1}(a,b,c) a_n.
TaylorSeries operator_coefficients(const Params& p, const TaylorSeries& f,
                                   std::size_t n);

// Modulus bound for the n-th coefficient of a source function: an exact
// series, 1 (bounded coefficients), n (univalent), or 2(1-beta)/n.
class CoefficientProfile {
public:
    enum class Kind { Ones, Univalent, MacGregor, Exact };

    static CoefficientProfile ones() { return CoefficientProfile(Kind::Ones); }
    static CoefficientProfile univalent() { return CoefficientProfile(Kind::Univalent); }
    static CoefficientProfile macgregor(double beta);
    static CoefficientProfile exact(TaylorSeries series);

    double bound(std::size_t n) const;

    // Polynomial growth degree of bound(n), used in the tail exponent.
    int degree() const;

    Kind kind() const { return kind_; }

    // Truncation limit for exact profiles, SIZE_MAX otherwise.
    std::size_t limit() const;

private:
    explicit CoefficientProfile(Kind k) : kind_(k) {}

    Kind kind_;
    double beta_ = 0.0;
    std::vector<cplx> exact_;
};

// Polynomial weight in n with real coefficients (ascending powers).
class WeightPoly {
public:
    WeightPoly(std::initializer_list<double> ascending) : coeffs_(ascending) {}

    double operator()(std::size_t n) const {
        const double x = static_cast<double>(n);
        double v = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
        return v;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    static WeightPoly starlike(double lambda) { return {lambda - 1.0, 1.0}; }       // n+lambda-1
    static WeightPoly convex(double lambda) { return {0.0, lambda - 1.0, 1.0}; }    // n(n+lambda-1)
    static WeightPoly ucv() { return {0.0, -1.0, 1.0}; }                            // n(n-1)
    static WeightPoly sp() { return {-1.0, 2.0}; }                                  // 2n-1

private:
    std::vector<double> coeffs_;
};

// sum_{n=2}^{N} weight(n) * t_{n-1}(|a|, b, c) * bound(n), with the fitted
// power-law tail estimate and the tail exponent
// sigma = |a| - 3 + deg(weight * bound).
struct CoefficientSumResult {
    double partial = 0.0;
    double tail_estimate = 0.0;
    double tail_error_bound = 0.0;
    double tail_exponent = 0.0;
    std::size_t terms = 0;
    bool divergent = false;

    double value() const { return partial + tail_estimate; }
};

CoefficientSumResult weighted_coefficient_sum(const CoefficientProfile& profile,
                                              const Params& p,
                                              const WeightPoly& weight,
                                              std::size_t n_max);

} // namespace clausen
