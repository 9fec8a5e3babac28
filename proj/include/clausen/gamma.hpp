#pragma once

#include <complex>
#include <cstddef>

#include "clausen/params.hpp"

namespace clausen {

// Gamma(x) for real x, Lanczos rational approximation with the reflection
// identity for x < 0.5. Throws pole_argument_error within 1e-12 of a
// non-positive integer.
double gamma(double x);

// sin(pi*x) with exact integer reduction, accurate near the zeros.
double sin_pi(double x);

// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1, by product
// recurrence; valid for every complex a including non-positive integers.
cplx pochhammer(cplx a, std::size_t n);
double pochhammer(double a, std::size_t n);

} // namespace clausen
