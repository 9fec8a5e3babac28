#pragma once

#include <cstddef>
#include <vector>

#include "clausen/params.hpp"

namespace clausen {

// Lazy generator for t_n = (alpha)_n (b)_n (c)_n / ((b+1)_n (c+1)_n (1)_n)
// with real alpha, via the ratio recurrence
//   t_{n+1} = t_n (alpha+n)(b+n)(c+n) / ((b+1+n)(c+1+n)(1+n));
// no Gamma quotients, so no overflow out to n ~ 10^6.
class TermRecurrence {
public:
    TermRecurrence(double alpha, double b, double c)
        : alpha_(alpha), b_(b), c_(c) {}

    double value() const { return t_; }
    std::size_t index() const { return n_; }

    void advance() {
        const double n = static_cast<double>(n_);
        t_ *= (alpha_ + n) * (b_ + n) * (c_ + n) /
              ((b_ + 1.0 + n) * (c_ + 1.0 + n) * (1.0 + n));
        ++n_;
    }

private:
    double alpha_, b_, c_;
    double t_ = 1.0;
    std::size_t n_ = 0;
};

// Same recurrence with complex a (raw mode for the operator coefficients).
class ComplexTermRecurrence {
public:
    ComplexTermRecurrence(cplx a, double b, double c) : a_(a), b_(b), c_(c) {}

    cplx value() const { return t_; }
    std::size_t index() const { return n_; }

    void advance() {
        const double n = static_cast<double>(n_);
        t_ *= (a_ + n) * ((b_ + n) * (c_ + n) /
                          ((b_ + 1.0 + n) * (c_ + 1.0 + n) * (1.0 + n)));
        ++n_;
    }

private:
    cplx a_;
    double b_, c_;
    cplx t_ = cplx(1.0, 0.0);
    std::size_t n_ = 0;
};

// t_0..t_N with alpha = a (raw) or alpha = |a| (modulus).
std::vector<cplx> term_sequence(const Params& p, AlphaMode mode, std::size_t n_max);

// Real-path variant used by every weighted sum.
std::vector<double> term_sequence(double alpha, double b, double c, std::size_t n_max);

} // namespace clausen
