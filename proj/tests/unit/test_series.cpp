#include <doctest.h>

#include <cmath>
#include <vector>

#include "clausen/closed_forms.hpp"
#include "clausen/series.hpp"
#include "clausen/terms.hpp"

using namespace clausen;

namespace {

TaylorSeries from_reals(std::vector<double> v) {
    std::vector<cplx> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = cplx(v[i], 0.0);
    return TaylorSeries(std::move(c));
}

} // namespace

TEST_CASE("normalization is enforced") {
    CHECK_THROWS_AS(TaylorSeries({cplx(2.0, 0.0)}), domain_violation_error);
    CHECK_THROWS_AS(TaylorSeries(std::vector<cplx>{}), domain_violation_error);
}

TEST_CASE("hadamard product basics") {
    const auto f = from_reals({1.0, 2.0, -0.5, 0.25});
    SUBCASE("z/(1-z) is the convolution identity") {
        const auto prod = hadamard_product(f, TaylorSeries::convolution_identity(4));
        for (std::size_t n = 1; n <= 4; ++n) CHECK(prod.a(n) == f.a(n));
    }
    SUBCASE("f = z collapses everything") {
        const auto prod = hadamard_product(TaylorSeries::linear(), f);
        CHECK(prod.truncation() == 1);
        CHECK(prod.a(1) == cplx(1.0, 0.0));
    }
    SUBCASE("a_n = n against b_n = 1/n gives all ones") {
        std::vector<double> ns, inv;
        for (std::size_t n = 1; n <= 6; ++n) {
            ns.push_back(static_cast<double>(n));
            inv.push_back(1.0 / static_cast<double>(n));
        }
        const auto prod = hadamard_product(from_reals(ns), from_reals(inv));
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(prod.a(n).real() == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("operator coefficients") {
    const Params p(-1.0, 2.0, 3.0);
    SUBCASE("terminating t zeroes the tail") {
        const auto f = from_reals({1.0, 2.0, 5.0, -3.0});
        const auto out = operator_coefficients(p, f, 4);
        CHECK(out.a(2).real() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(out.a(3) == cplx(0.0, 0.0));
        CHECK(out.a(4) == cplx(0.0, 0.0));
    }
    SUBCASE("f = z maps to z") {
        const auto out = operator_coefficients(p, TaylorSeries::linear(), 10);
        CHECK(out.truncation() == 1);
    }
    SUBCASE("equals hadamard with the z*3F2 series") {
        const Params q(cplx(0.4, 0.8), 1.5, 2.5);
        const auto f = from_reals({1.0, 0.3, -0.7, 2.0, 0.1});
        const auto via_op = operator_coefficients(q, f, 5);
        const auto via_had = hadamard_product(hyp3f2_series(q, 5), f);
        for (std::size_t n = 1; n <= 5; ++n)
            CHECK(std::abs(via_op.a(n) - via_had.a(n)) <= 1e-14);
    }
    SUBCASE("modulus profile dominates") {
        const Params q(cplx(-0.3, 1.1), 2.0, 3.0);
        const auto f = from_reals({1.0, -2.0, 0.5, 1.5});
        const auto out = operator_coefficients(q, f, 4);
        const auto tmod = term_sequence(std::abs(q.a), q.b, q.c, 3);
        for (std::size_t n = 2; n <= 4; ++n)
            CHECK(std::abs(out.a(n)) <= tmod[n - 1] * std::abs(f.a(n)) * (1.0 + 1e-12));
    }
}

TEST_CASE("coefficient profiles") {
    CHECK(CoefficientProfile::ones().bound(7) == 1.0);
    CHECK(CoefficientProfile::univalent().bound(7) == 7.0);
    CHECK(CoefficientProfile::macgregor(0.25).bound(5) ==
          doctest::Approx(2.0 * 0.75 / 5.0).epsilon(1e-15));
    const auto ex = CoefficientProfile::exact(from_reals({1.0, -2.5, 0.0, 3.0}));
    CHECK(ex.bound(2) == 2.5);
    CHECK(ex.bound(4) == 3.0);
    CHECK(ex.bound(9) == 0.0);
    CHECK_THROWS_AS(CoefficientProfile::macgregor(1.0), domain_violation_error);
}

TEST_CASE("weight polynomials") {
    const auto w = WeightPoly::convex(0.8);
    CHECK(w(3) == doctest::Approx(3.0 * (3.0 + 0.8 - 1.0)).epsilon(1e-15));
    CHECK(w.degree() == 2);
    CHECK(WeightPoly::sp()(5) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(WeightPoly::ucv()(5) == doctest::Approx(20.0).epsilon(1e-15));
    CHECK(WeightPoly::starlike(1.0).degree() == 1);
}

TEST_CASE("weighted_coefficient_sum") {
    SUBCASE("exact profile of z is zero") {
        const auto r = weighted_coefficient_sum(
            CoefficientProfile::exact(TaylorSeries::linear()),
            Params(0.5, 2.0, 3.0), WeightPoly::starlike(1.0), 100000);
        CHECK(r.value() == 0.0);
    }
    SUBCASE("univalent profile with the convex weight diverges") {
        const auto r = weighted_coefficient_sum(CoefficientProfile::univalent(),
                                                Params(0.5, 2.0, 3.0),
                                                WeightPoly::convex(1.0), 20000);
        CHECK(r.tail_exponent >= -1.0);
        CHECK(r.divergent);
    }
    SUBCASE("matches the ST1 closed form at (|a|=0.5, 2, 3, lambda=1)") {
        // Closed route: L1 + (lambda-1) L0 - lambda = 4.8 - 1 = 3.8.
        const auto r = weighted_coefficient_sum(CoefficientProfile::ones(),
                                                Params(0.5, 2.0, 3.0),
                                                WeightPoly::starlike(1.0), 100000);
        CHECK(r.value() == doctest::Approx(3.8).epsilon(1e-6 / 3.8));
        CHECK(std::abs(r.value() - 3.8) < 1e-6);
    }
    SUBCASE("monotone in N for non-negative weights") {
        const Params p(0.4, 1.5, 2.5);
        double prev = 0.0;
        for (std::size_t n : {100u, 1000u, 10000u}) {
            const auto r = weighted_coefficient_sum(CoefficientProfile::ones(), p,
                                                    WeightPoly::starlike(0.7), n);
            CHECK(r.partial >= prev);
            prev = r.partial;
        }
    }
    SUBCASE("partial sums at N and 2N differ by less than the tail estimate") {
        const Params p(0.6, 2.0, 3.0);
        const auto rN = weighted_coefficient_sum(CoefficientProfile::ones(), p,
                                                 WeightPoly::starlike(1.0), 50000);
        const auto r2N = weighted_coefficient_sum(CoefficientProfile::ones(), p,
                                                  WeightPoly::starlike(1.0), 100000);
        CHECK(r2N.partial - rN.partial <=
              rN.tail_estimate + rN.tail_error_bound + 1e-12);
    }
}

TEST_CASE("hyp3f2 series coefficients are the term sequence") {
    const Params p(cplx(0.2, 0.4), 2.0, 3.0);
    const auto s = hyp3f2_series(p, 6);
    const auto t = term_sequence(p, AlphaMode::Raw, 5);
    CHECK(s.a(1) == cplx(1.0, 0.0));
    for (std::size_t n = 2; n <= 6; ++n) CHECK(s.a(n) == t[n - 1]);
}
