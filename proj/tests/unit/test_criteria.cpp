#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "clausen/criteria.hpp"

using namespace clausen;

namespace {

const Params kP(0.3, 2.0, 3.0);
const ClassParams kCp{0.8, 0.25};

TaylorSeries extremal_series(const CoefficientProfile& profile, std::size_t n) {
    std::vector<cplx> coeffs(n);
    coeffs[0] = cplx(1.0, 0.0);
    for (std::size_t k = 2; k <= n; ++k) coeffs[k - 1] = cplx(profile.bound(k), 0.0);
    return TaylorSeries(std::move(coeffs));
}

} // namespace

TEST_CASE("theorem table round-trips and metadata") {
    CHECK(all_theorems().size() == 12);
    for (TheoremId id : all_theorems())
        CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_FALSE(theorem_from_name("XX9").has_value());

    const int want_degree[12] = {1, 0, 2, 2, 1, 3, 2, 1, 3, 1, 0, 2};
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(premise_degree(static_cast<TheoremId>(i)) == want_degree[i]);

    CHECK(theorem_class(TheoremId::ST2) == GeometricClass::StarlikeLambda);
    CHECK(theorem_class(TheoremId::CV3) == GeometricClass::ConvexLambda);
    CHECK(theorem_class(TheoremId::UC1) == GeometricClass::UCV);
    CHECK(theorem_class(TheoremId::SP2) == GeometricClass::Sp);
}

TEST_CASE("frozen criterion values at (0.3, 2, 3, 0.8, 0.25)") {
    struct Row {
        TheoremId id;
        double lhs;
        bool convergent;
    };
    const Row rows[] = {
        {TheoremId::ST1, 2.1661998132586367880, true},
        {TheoremId::ST2, 1.9421101774042950514, true},
        {TheoremId::ST3, -10.382819794584500467, false},
        {TheoremId::CV1, -10.382819794584500467, false},
        {TheoremId::CV2, 2.1661998132586367880, true},
        {TheoremId::CV3, 26.816059757236227824, false},
        {TheoremId::UC1, -12.324929971988795518, false},
        {TheoremId::UC2, 1.1204481792717086835, true},
        {TheoremId::UC3, 34.733893557422969188, false},
        {TheoremId::SP1, 3.5480859010270774977, true},
        {TheoremId::SP2, 1.5032679738562091503, true},
        {TheoremId::SP3, -22.222222222222222222, false},
    };
    for (const auto& row : rows) {
        CAPTURE(theorem_name(row.id));
        const auto rep = criterion(row.id, kP, kCp);
        CHECK(rep.premise_convergent == row.convergent);
        CHECK(rep.lhs == doctest::Approx(row.lhs).epsilon(1e-12));
        if (!row.convergent) {
            CHECK(rep.verdict == Verdict::DivergentPremise);
            CHECK_FALSE(rep.holds.has_value());
        }
    }

    CHECK(criterion(TheoremId::ST1, kP, kCp).rhs == doctest::Approx(1.6));
    CHECK(criterion(TheoremId::ST2, kP, kCp).rhs ==
          doctest::Approx(2.1904761904761904762).epsilon(1e-13));
    CHECK(criterion(TheoremId::CV2, kP, kCp).rhs ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(criterion(TheoremId::UC2, kP, kCp).rhs ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    CHECK(criterion(TheoremId::SP2, kP, kCp).rhs ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-13));

    CHECK(*criterion(TheoremId::ST2, kP, kCp).holds);
    CHECK(*criterion(TheoremId::SP2, kP, kCp).holds);
    CHECK_FALSE(*criterion(TheoremId::ST1, kP, kCp).holds);
    CHECK_FALSE(*criterion(TheoremId::UC2, kP, kCp).holds);
}

TEST_CASE("printed displays: CV1, CV3, UC3 deviate; the rest agree") {
    for (TheoremId id : all_theorems()) {
        const auto rep = criterion(id, kP, kCp);
        REQUIRE(rep.printed_matches_derived.has_value());
        const bool deviates = id == TheoremId::CV1 || id == TheoremId::CV3 ||
                              id == TheoremId::UC3;
        CAPTURE(theorem_name(id));
        CHECK(*rep.printed_matches_derived == !deviates);
    }
    const auto cv1 = criterion(TheoremId::CV1, kP, kCp);
    CHECK(cv1.printed_lhs == doctest::Approx(-2.1661998132586367880).epsilon(1e-12));
    const auto cv3 = criterion(TheoremId::CV3, kP, kCp);
    CHECK(cv3.printed_lhs == doctest::Approx(40.261437908496732026).epsilon(1e-12));
    const auto uc3 = criterion(TheoremId::UC3, kP, kCp);
    CHECK(uc3.printed_lhs == doctest::Approx(48.179271708683473389).epsilon(1e-12));
}

TEST_CASE("ST2 corollary point (lambda = 1)") {
    const auto rep = criterion(TheoremId::ST2, Params(1e-6, 2.0, 3.0), ClassParams{1.0, 0.0});
    CHECK(std::abs(rep.lhs - 1.0) < 1e-5);
    CHECK(rep.rhs == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(*rep.holds);
}

TEST_CASE("divergent premises") {
    const auto st3 = criterion(TheoremId::ST3, Params(0.5, 2.0, 3.0), ClassParams{1.0, 0.0});
    CHECK(st3.verdict == Verdict::DivergentPremise);
    CHECK(st3.premise_exponent == doctest::Approx(-0.5));

    for (double a : {0.3, 0.9}) {
        const auto uc1 = criterion(TheoremId::UC1, Params(a, 2.0, 3.0), ClassParams{1.0, 0.0});
        CHECK(uc1.verdict == Verdict::DivergentPremise);
    }
}

TEST_CASE("criterion errors") {
    CHECK_THROWS_AS(criterion(TheoremId::ST2, Params(1.0, 2.0, 3.0), ClassParams{1.0, 0.0}),
                    near_pole_error);
    CHECK_THROWS_AS(criterion(TheoremId::ST1, Params(0.5, 2.0, 2.0), ClassParams{1.0, 0.0}),
                    degenerate_parameters_error);
    CHECK_THROWS_AS(criterion(TheoremId::ST2, Params(0.5, 1.0, 3.0), ClassParams{1.0, 0.0}),
                    degenerate_parameters_error);
    CHECK_THROWS_AS(criterion(TheoremId::ST2, Params(1.5, 0.3, 3.0), ClassParams{1.0, 0.0}),
                    domain_violation_error);
    CHECK_THROWS_AS(criterion(TheoremId::ST1, Params(0.5, 2.0, 3.0), ClassParams{1.5, 0.0}),
                    domain_violation_error);
}

TEST_CASE("rhs grows with beta for the R(beta) theorems") {
    // Raising beta shrinks the source class, so the criterion can only get
    // easier: rhs is non-decreasing (equivalently the premise bound falls).
    for (TheoremId id : {TheoremId::ST2, TheoremId::CV2, TheoremId::UC2, TheoremId::SP2}) {
        double prev = -1e300;
        bool prev_holds = false;
        for (double beta = 0.0; beta < 0.95; beta += 0.1) {
            const auto rep =
                criterion(id, Params(0.4, 2.0, 3.0), ClassParams{0.9, beta});
            CAPTURE(theorem_name(id));
            CAPTURE(beta);
            CHECK(rep.rhs >= prev);
            if (prev_holds) CHECK(*rep.holds);  // holding is monotone in beta
            prev = rep.rhs;
            prev_holds = *rep.holds;
        }
    }
}

TEST_CASE("closed premise statistic matches the truncated coefficient sum") {
    std::mt19937 rng(190733);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const TheoremId ids[] = {TheoremId::ST1, TheoremId::ST2, TheoremId::CV2,
                             TheoremId::UC2, TheoremId::SP1, TheoremId::SP2};
    for (TheoremId id : ids) {
        for (int trial = 0; trial < 4; ++trial) {
            const bool wide = id == TheoremId::ST2 || id == TheoremId::SP2;
            double alpha = 0.0;
            do {
                alpha = 0.05 + (wide ? 1.85 : 0.85) * unit(rng);
            } while (std::abs(alpha - 1.0) < 0.1);
            const double b = 1.1 + 2.0 * unit(rng);
            double c = 1.1 + 2.0 * unit(rng);
            if (std::abs(b - c) < 0.1) c += 0.2;
            const Params p(alpha, b, c);
            const ClassParams cp{0.5 + 0.5 * unit(rng), 0.5 * unit(rng)};

            const auto rep = criterion(id, p, cp);
            REQUIRE(rep.premise_convergent);
            const double t_closed = premise_statistic_from_lhs(id, rep.lhs, p, cp);
            const auto t_oracle = weighted_coefficient_sum(
                source_profile(id, cp), p, class_weight(id, cp), 100000);
            CAPTURE(theorem_name(id));
            CAPTURE(alpha);
            CAPTURE(b);
            CAPTURE(c);
            CHECK(std::abs(t_closed - t_oracle.value()) <=
                  std::max(1e-6, 1e-6 * std::abs(rep.lhs)));
        }
    }
}

TEST_CASE("coefficient_sum_test examples") {
    const ClassParams cp{1.0, 0.0};
    SUBCASE("f = z always holds with statistic 0") {
        for (GeometricClass cls : {GeometricClass::StarlikeLambda,
                                   GeometricClass::ConvexLambda, GeometricClass::UCV,
                                   GeometricClass::Sp}) {
            const auto v = coefficient_sum_test(cls, TaylorSeries::linear(), cp, 1000);
            CHECK(v.statistic == 0.0);
            CHECK(v.holds);
        }
    }
    SUBCASE("single-term equality case") {
        // f = z + (lambda/(1+lambda)) z^2 meets the S*_lambda bound exactly.
        const TaylorSeries f({cplx(1.0, 0.0), cplx(0.5, 0.0)});  // lambda = 1
        const auto v = coefficient_sum_test(GeometricClass::StarlikeLambda, f, cp, 10);
        CHECK(v.statistic == 1.0);
        CHECK(v.holds);
    }
    SUBCASE("Koebe-type coefficients blow past every threshold") {
        std::vector<cplx> coeffs(2000);
        for (std::size_t n = 1; n <= coeffs.size(); ++n)
            coeffs[n - 1] = cplx(static_cast<double>(n), 0.0);
        const TaylorSeries koebe(std::move(coeffs));
        const auto small = coefficient_sum_test(GeometricClass::StarlikeLambda, koebe, cp, 100);
        const auto large = coefficient_sum_test(GeometricClass::StarlikeLambda, koebe, cp, 2000);
        CHECK_FALSE(small.holds);
        CHECK(large.statistic > small.statistic * 100.0);  // unbounded growth
    }
}

TEST_CASE("soundness hand-off: holding criteria certify the extremal series") {
    struct Case {
        TheoremId id;
        Params p;
        ClassParams cp;
    };
    const Case cases[] = {
        {TheoremId::ST1, Params(0.2, 2.0, 3.0), ClassParams{1.0, 0.0}},
        {TheoremId::SP1, Params(0.1, 2.0, 3.0), ClassParams{1.0, 0.0}},
        {TheoremId::ST2, kP, kCp},
        {TheoremId::UC2, Params(0.1, 2.0, 3.0), ClassParams{1.0, 0.8}},
    };
    for (const auto& tc : cases) {
        const auto rep = criterion(tc.id, tc.p, tc.cp);
        CAPTURE(theorem_name(tc.id));
        REQUIRE(rep.holds.has_value());
        REQUIRE(*rep.holds);

        const std::size_t n = 10000;
        const Params p_mod(std::abs(tc.p.a), tc.p.b, tc.p.c);
        const auto source = extremal_series(source_profile(tc.id, tc.cp), n);
        const auto mapped = operator_coefficients(p_mod, source, n);
        const auto verdict = coefficient_sum_test(theorem_class(tc.id), mapped, tc.cp, n);
        CHECK(verdict.statistic <= verdict.threshold + 1e-4);
    }
}
