#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "clausen/closed_forms.hpp"

namespace clausen::detail {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is mantissa * 2^exponent.
Rational rational_from_double(double x) {
    if (x == 0.0) return Rational(0);
    int exp2 = 0;
    const double mant = std::frexp(x, &exp2);
    const auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
    exp2 -= 53;
    Rational r(mant_int);
    if (exp2 >= 0)
        r *= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exp2)));
    else
        r /= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exp2)));
    return r;
}

Rational rational_weight(Weight w, long long n) {
    const long long m = n + 1;
    switch (w) {
        case Weight::W0: return Rational(1);
        case Weight::W1: return Rational(m);
        case Weight::W2: return Rational(m * m);
        case Weight::W3: return Rational(m * m * m);
        case Weight::WInv: return Rational(1) / m;
    }
    return Rational(1);
}

} // namespace

OracleResult exact_terminating_sum(Weight w, double a, double b, double c) {
    const auto m = static_cast<long long>(-a);
    const Rational ar(static_cast<long long>(a));
    const Rational br = rational_from_double(b);
    const Rational cr = rational_from_double(c);

    Rational term(1);
    Rational total(0);
    for (long long n = 0; n <= m; ++n) {
        total += rational_weight(w, n) * term;
        term *= (ar + n) * (br + n) * (cr + n) /
                ((br + 1 + n) * (cr + 1 + n) * (1 + n));
    }

    OracleResult out;
    out.value = total.convert_to<double>();
    out.abs_error_bound = 0.0;
    out.terms_used = static_cast<std::size_t>(m) + 1;
    out.exact = true;
    return out;
}

} // namespace clausen::detail
