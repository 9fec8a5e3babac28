#include "clausen/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "clausen/closed_forms.hpp"
#include "clausen/gamma.hpp"
#include "clausen/summation.hpp"

namespace clausen {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "ST1", "ST2", "ST3", "CV1", "CV2", "CV3",
    "UC1", "UC2", "UC3", "SP1", "SP2", "SP3",
};

int family(TheoremId id) { return static_cast<int>(id) / 3; }  // ST, CV, UC, SP
int row(TheoremId id) { return static_cast<int>(id) % 3; }     // 0, 1, 2

// bc / ((alpha-1)(b-1)(c-1)), the prefactor the 1/(n+1)-weighted sum
// contributes to ST2 and SP2.
double q_factor(double alpha, double b, double c) {
    return b * c / ((alpha - 1.0) * (b - 1.0) * (c - 1.0));
}

double derived_lhs(TheoremId id, const detail::LemmaKernel& k, double lam) {
    const double b = k.b, c = k.c;
    switch (id) {
        case TheoremId::ST1:
        case TheoremId::CV2:
            return k.bracket(lam - b, lam - c);
        case TheoremId::ST3:
        case TheoremId::CV1:
            return k.bracket((1.0 - b) * (lam - b), (1.0 - c) * (lam - c));
        case TheoremId::CV3:
            return k.bracket((1.0 - b) * (1.0 - b) * (lam - b),
                             (1.0 - c) * (1.0 - c) * (lam - c));
        case TheoremId::UC1:
            return k.bracket(b * (b - 1.0), c * (c - 1.0));
        case TheoremId::UC2:
            return k.bracket(-b, -c);
        case TheoremId::UC3:
            return k.bracket(-b * (1.0 - b) * (1.0 - b), -c * (1.0 - c) * (1.0 - c));
        case TheoremId::SP1:
            return k.bracket(1.0 - 2.0 * b, 1.0 - 2.0 * c);
        case TheoremId::SP3:
            return k.bracket((1.0 - b) * (1.0 - 2.0 * b), (1.0 - c) * (1.0 - 2.0 * c));
        case TheoremId::ST2:
            return k.bracket((b - lam) / (b - 1.0), (c - lam) / (c - 1.0));
        case TheoremId::SP2:
            return k.bracket((2.0 * b - 1.0) / (b - 1.0), (2.0 * c - 1.0) / (c - 1.0)) +
                   q_factor(k.alpha, b, c);
    }
    throw domain_violation_error("unknown theorem id");
}

// The displayed inequalities transcribed literally; they deviate from the
// derived reconstruction for CV1 (a b-for-c slip in the second bracket) and
// for CV3/UC3 (which inherit the (1-b)^3 - b^2 bracket).
double printed_lhs(TheoremId id, const detail::LemmaKernel& k, double lam) {
    const double b = k.b, c = k.c;
    switch (id) {
        case TheoremId::CV1:
            return k.bracket((1.0 - b) * (lam - b), (1.0 - b) * (lam - c));
        case TheoremId::CV3:
            return k.bracket(b * b - b - b * b * b + lam * (1.0 - b) * (1.0 - b),
                             c * c - c - c * c * c + lam * (1.0 - c) * (1.0 - c));
        case TheoremId::UC3:
            return k.bracket(b * b - b - b * b * b, c * c - c - c * c * c);
        case TheoremId::UC1:
            // (1-c) Gamma(c+1)/Gamma(1-alpha+c) - (1-b) Gamma(b+1)/Gamma(1-alpha+b)
            return k.pref * k.gamma1 *
                   ((1.0 - c) * c * k.gc - (1.0 - b) * b * k.gb);
        case TheoremId::UC2:
            return k.pref * k.gamma1 * (c * k.gc - b * k.gb);
        default:
            return derived_lhs(id, k, lam);
    }
}

double rhs_value(TheoremId id, const detail::LemmaKernel& k, const ClassParams& cp) {
    const double lam = cp.lambda;
    const double half_inv = 1.0 / (2.0 * (1.0 - cp.beta));
    switch (id) {
        case TheoremId::ST1:
        case TheoremId::ST3:
        case TheoremId::CV1:
        case TheoremId::CV3:
            return 2.0 * lam;
        case TheoremId::ST2:
            return lam * (1.0 + half_inv) + (lam - 1.0) * q_factor(k.alpha, k.b, k.c);
        case TheoremId::CV2:
            return lam * (half_inv + 1.0);
        case TheoremId::UC1:
        case TheoremId::UC3:
            return 1.0 / 3.0;
        case TheoremId::UC2:
            return 1.0 / (6.0 * (1.0 - cp.beta));
        case TheoremId::SP1:
        case TheoremId::SP3:
            return 2.0;
        case TheoremId::SP2:
            return half_inv + 1.0;
    }
    throw domain_violation_error("unknown theorem id");
}

bool uses_inverse_weight(TheoremId id) {
    return id == TheoremId::ST2 || id == TheoremId::SP2;
}

} // namespace

std::string_view theorem_name(TheoremId id) {
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<TheoremId>(i);
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (std::size_t i = 0; i < kNames.size(); ++i)
            v.push_back(static_cast<TheoremId>(i));
        return v;
    }();
    return ids;
}

GeometricClass theorem_class(TheoremId id) {
    switch (family(id)) {
        case 0: return GeometricClass::StarlikeLambda;
        case 1: return GeometricClass::ConvexLambda;
        case 2: return GeometricClass::UCV;
        default: return GeometricClass::Sp;
    }
}

int premise_degree(TheoremId id) {
    // class-weight degree (1, 2, 2, 1 per family) plus the profile degree
    // (0 for ones, -1 for MacGregor, +1 for univalent).
    static constexpr int kWeightDeg[4] = {1, 2, 2, 1};
    static constexpr int kProfileDeg[3] = {0, -1, 1};
    return kWeightDeg[family(id)] + kProfileDeg[row(id)];
}

CoefficientProfile source_profile(TheoremId id, const ClassParams& cp) {
    switch (row(id)) {
        case 0: return CoefficientProfile::ones();
        case 1: return CoefficientProfile::macgregor(cp.beta);
        default: return CoefficientProfile::univalent();
    }
}

WeightPoly class_weight(TheoremId id, const ClassParams& cp) {
    switch (family(id)) {
        case 0: return WeightPoly::starlike(cp.lambda);
        case 1: return WeightPoly::convex(cp.lambda);
        case 2: return WeightPoly::ucv();
        default: return WeightPoly::sp();
    }
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::DivergentPremise: return "DivergentPremise";
    }
    return "?";
}

CriterionReport criterion(TheoremId id, const Params& p, const ClassParams& cp) {
    p.validate();
    cp.validate();
    const double alpha = std::abs(p.a);
    if (p.degenerate_bc())
        throw degenerate_parameters_error("criterion requires b != c");
    if (!(p.b > alpha - 1.0) || !(p.c > alpha - 1.0))
        throw domain_violation_error("criterion requires b, c > |a| - 1");

    CriterionReport rep;
    rep.theorem = id;
    rep.premise_exponent = alpha - 3.0 + static_cast<double>(premise_degree(id));
    rep.premise_convergent = rep.premise_exponent < -1.0;

    if (!rep.premise_convergent) {
        rep.verdict = Verdict::DivergentPremise;
        rep.notes = "premise sum diverges under the extremal profile";
        // The closed forms may still be evaluable; report them for audit.
        try {
            const auto k = detail::lemma_kernel(alpha, p.b, p.c);
            if (uses_inverse_weight(id) &&
                (std::abs(p.b - 1.0) < kDegenerateTol ||
                 std::abs(p.c - 1.0) < kDegenerateTol))
                throw degenerate_parameters_error("b, c != 1 required");
            rep.lhs = derived_lhs(id, k, cp.lambda);
            rep.printed_lhs = printed_lhs(id, k, cp.lambda);
            rep.rhs = rhs_value(id, k, cp);
            rep.printed_matches_derived =
                std::abs(rep.printed_lhs - rep.lhs) <=
                1e-9 * std::max({1.0, std::abs(rep.lhs), std::abs(rep.printed_lhs)});
        } catch (const error&) {
            rep.lhs = rep.rhs = rep.printed_lhs = std::nan("");
        }
        return rep;
    }

    if (std::abs(alpha - 1.0) < kPoleTol)
        throw near_pole_error("Gamma(1-|a|) pole at |a| = 1");
    if (uses_inverse_weight(id)) {
        if (std::abs(alpha - 1.0) < kDegenerateTol)
            throw near_pole_error("|a| != 1 required (1/(|a|-1) factor)");
        if (std::abs(p.b - 1.0) < kDegenerateTol || std::abs(p.c - 1.0) < kDegenerateTol)
            throw degenerate_parameters_error("b, c != 1 required");
    }

    const auto k = detail::lemma_kernel(alpha, p.b, p.c);
    rep.lhs = derived_lhs(id, k, cp.lambda);
    rep.printed_lhs = printed_lhs(id, k, cp.lambda);
    rep.rhs = rhs_value(id, k, cp);
    rep.holds = rep.lhs <= rep.rhs;
    rep.verdict = *rep.holds ? Verdict::Holds : Verdict::Fails;
    rep.printed_matches_derived =
        std::abs(rep.printed_lhs - rep.lhs) <=
        1e-9 * std::max({1.0, std::abs(rep.lhs), std::abs(rep.printed_lhs)});
    if (!*rep.printed_matches_derived)
        rep.notes = "printed display deviates from the derived reconstruction";
    return rep;
}

double premise_statistic_from_lhs(TheoremId id, double lhs, const Params& p,
                                  const ClassParams& cp) {
    const double lam = cp.lambda;
    const double mac = 2.0 * (1.0 - cp.beta);
    switch (id) {
        case TheoremId::ST1:
        case TheoremId::ST3:
        case TheoremId::CV1:
        case TheoremId::CV3:
            return lhs - lam;
        case TheoremId::UC1:
        case TheoremId::UC3:
            return lhs;
        case TheoremId::SP1:
        case TheoremId::SP3:
            return lhs - 1.0;
        case TheoremId::CV2:
            return mac * (lhs - lam);
        case TheoremId::UC2:
            return mac * lhs;
        case TheoremId::SP2:
            return mac * (lhs - 1.0);
        case TheoremId::ST2: {
            const double q = q_factor(std::abs(p.a), p.b, p.c);
            return mac * (lhs - (lam - 1.0) * q - lam);
        }
    }
    throw domain_violation_error("unknown theorem id");
}

CoefficientSumVerdict coefficient_sum_test(GeometricClass cls, const TaylorSeries& f,
                                           const ClassParams& cp, std::size_t n_max) {
    cp.validate();
    WeightPoly w = [&]() -> WeightPoly {
        switch (cls) {
            case GeometricClass::StarlikeLambda: return WeightPoly::starlike(cp.lambda);
            case GeometricClass::ConvexLambda: return WeightPoly::convex(cp.lambda);
            case GeometricClass::UCV: return WeightPoly::ucv();
            case GeometricClass::Sp: return WeightPoly::sp();
        }
        throw domain_violation_error("unknown class");
    }();

    CoefficientSumVerdict out;
    switch (cls) {
        case GeometricClass::StarlikeLambda:
        case GeometricClass::ConvexLambda: out.threshold = cp.lambda; break;
        case GeometricClass::UCV: out.threshold = 1.0 / 3.0; break;
        case GeometricClass::Sp: out.threshold = 1.0; break;
    }

    CompensatedSum acc;
    const std::size_t last = std::min(n_max, f.truncation());
    for (std::size_t n = 2; n <= last; ++n) acc.add(w(n) * std::abs(f.a(n)));
    out.statistic = acc.value();
    out.holds = out.statistic <= out.threshold;
    return out;
}

} // namespace clausen
