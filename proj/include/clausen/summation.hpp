#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace clausen {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// S(s, N) = sum_{n=N+1}^inf n^s for s < -1, by Euler-Maclaurin through the
// third-derivative term.
double power_tail(double s, double n);

struct TailEstimate {
    double tail = 0.0;   // estimated remainder over n > n_full
    double bound = 0.0;  // error estimate for that remainder
};

// Remainder of sum f(n) over n > n_full for f(n) ~ C n^sigma (1 + e1/n + ...).
// C and e1 are fitted from the samples at n_half and n_full; the sample at
// n_quarter sizes the neglected 1/n^2 term for the bound. Requires
// n_quarter < n_half < n_full, all in the asymptotic regime.
TailEstimate power_law_tail(double sigma,
                            std::size_t n_quarter, double f_quarter,
                            std::size_t n_half, double f_half,
                            std::size_t n_full, double f_full);

struct SeriesSumResult {
    double partial = 0.0;     // compensated partial sum through n = terms
    double tail = 0.0;        // tail estimate (0 when divergent)
    double bound = 0.0;       // uncertainty of partial + tail
    std::size_t terms = 0;    // last index included
    bool divergent = false;
    bool growth_confirmed = false;  // doubling-N test agreed with sigma rule
    bool tolerance_met = false;

    double value() const { return partial + tail; }
};

// Sums f(n) for n = n_start... If sigma < -1, grows N by doubling until the
// tail-corrected uncertainty falls below tol or N reaches n_cap. If
// sigma >= -1, runs the doubling-N growth test instead and reports
// divergence.
SeriesSumResult sum_series(const std::function<double(std::size_t)>& f,
                           std::size_t n_start, double sigma, double tol,
                           std::size_t n_cap);

// Fixed-N variant: partial sum through exactly n_last plus the tail
// estimate at n_last (no adaptivity, no divergence test).
SeriesSumResult sum_series_fixed(const std::function<double(std::size_t)>& f,
                                 std::size_t n_start, double sigma,
                                 std::size_t n_last);

} // namespace clausen
