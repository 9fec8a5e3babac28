#pragma once

#include <stdexcept>
#include <string>

namespace clausen {

// Base class for all library errors so callers can catch one type.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma evaluated within 1e-12 of a non-positive integer.
class pole_argument_error : public error {
public:
    explicit pole_argument_error(const std::string& msg) : error(msg) {}
};

// A closed form hit a Gamma pole in alpha (alpha within 1e-12 of an
// excluded positive integer).
class near_pole_error : public error {
public:
    explicit near_pole_error(const std::string& msg) : error(msg) {}
};

// b ~ c (the 1/(c-b) prefactor blows up), or b ~ 1 / c ~ 1 where a
// formula carries 1/(b-1), 1/(c-1).
class degenerate_parameters_error : public error {
public:
    explicit degenerate_parameters_error(const std::string& msg) : error(msg) {}
};

// Parameters violate a stated hypothesis (b, c > alpha - 1, positivity,
// class-parameter ranges).
class domain_violation_error : public error {
public:
    explicit domain_violation_error(const std::string& msg) : error(msg) {}
};

// A weighted series was requested outside its convergence domain and the
// caller did not force partial-sum inspection.
class divergent_sum_error : public error {
public:
    explicit divergent_sum_error(const std::string& msg) : error(msg) {}
};

// The summation cap was reached before the tail bound fell below the
// requested tolerance.
class tolerance_unreachable_error : public error {
public:
    explicit tolerance_unreachable_error(const std::string& msg) : error(msg) {}
};

// |f(z)| underflowed at a disc sample point.
class zero_encountered_error : public error {
public:
    explicit zero_encountered_error(const std::string& msg) : error(msg) {}
};

// A batch run was given nothing to do.
class empty_plan_error : public error {
public:
    explicit empty_plan_error(const std::string& msg) : error(msg) {}
};

// A scan range is malformed (min > max, steps < 1, ...).
class invalid_range_error : public error {
public:
    explicit invalid_range_error(const std::string& msg) : error(msg) {}
};

} // namespace clausen
