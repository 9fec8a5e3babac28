#pragma once

#include <complex>
#include <cmath>

#include "clausen/errors.hpp"

namespace clausen {

using cplx = std::complex<double>;

// Thresholds shared across the library.
inline constexpr double kPoleTol = 1e-12;       // "near a pole" in alpha / gamma argument
inline constexpr double kDegenerateTol = 1e-9;  // b ~ c, b ~ 1, c ~ 1

// Whether an evaluation replaces a by |a| (the theorems) or keeps it raw
// (terminating checks, operator coefficients).
enum class AlphaMode { Raw, Modulus };

// Parameter triple of 3F2(a,b,c; b+1,c+1; z): a complex nonzero, b, c > 0.
struct Params {
    cplx a;
    double b = 0.0;
    double c = 0.0;

    Params() = default;
    Params(cplx a_, double b_, double c_) : a(a_), b(b_), c(c_) {}
    Params(double a_, double b_, double c_) : a(a_, 0.0), b(b_), c(c_) {}

    // The effective real parameter for the requested mode. Raw mode is
    // restricted to real a (no complex Gamma in this library).
    double alpha(AlphaMode mode) const {
        if (mode == AlphaMode::Modulus) return std::abs(a);
        if (a.imag() != 0.0)
            throw domain_violation_error("raw-alpha evaluation requires real a");
        return a.real();
    }

    void validate() const {
        if (a == cplx(0.0, 0.0))
            throw domain_violation_error("a must be nonzero");
        if (!(b > 0.0) || !(c > 0.0))
            throw domain_violation_error("b and c must be positive");
    }

    bool degenerate_bc() const { return std::abs(b - c) < kDegenerateTol; }
};

// Class parameters: lambda in (0, 1] for S*_lambda / C_lambda, beta in
// [0, 1) for R(beta).
struct ClassParams {
    double lambda = 1.0;
    double beta = 0.0;

    void validate() const {
        if (!(lambda > 0.0) || lambda > 1.0)
            throw domain_violation_error("lambda must lie in (0, 1]");
        if (beta < 0.0 || !(beta < 1.0))
            throw domain_violation_error("beta must lie in [0, 1)");
    }
};

// True when x sits within tol of some integer <= limit (used for pole and
// terminating-parameter detection).
inline bool near_integer(double x, double& rounded, double tol = kPoleTol) {
    rounded = std::round(x);
    return std::abs(x - rounded) <= tol;
}

// Terminating series: raw real a within 1e-12 of a non-positive integer.
inline bool is_terminating(const Params& p, AlphaMode mode) {
    if (mode != AlphaMode::Raw || p.a.imag() != 0.0) return false;
    double r = 0.0;
    return near_integer(p.a.real(), r) && r <= 0.0;
}

} // namespace clausen
