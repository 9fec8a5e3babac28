#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clausen/params.hpp"
#include "clausen/series.hpp"

namespace clausen {

// The twelve sufficient-condition criteria. Row 1 of each family tests
// z 3F2 itself (coefficient profile: ones), row 2 maps R(beta) through the
// operator (profile 2(1-beta)/n), row 3 maps the univalent class S
// (profile n). Families: ST = S*_lambda, CV = C_lambda, UC = UCV, SP = S_p.
enum class TheoremId { ST1, ST2, ST3, CV1, CV2, CV3, UC1, UC2, UC3, SP1, SP2, SP3 };

enum class GeometricClass { StarlikeLambda, ConvexLambda, UCV, Sp };

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
const std::vector<TheoremId>& all_theorems();

GeometricClass theorem_class(TheoremId id);

// Degree of the premise-sum terms in n (weight times coefficient bound);
// the premise converges iff |a| - 3 + degree < -1.
int premise_degree(TheoremId id);

// Source-class coefficient profile presupposed by the theorem.
CoefficientProfile source_profile(TheoremId id, const ClassParams& cp);

// The class weight w(n) of the family's coefficient condition.
WeightPoly class_weight(TheoremId id, const ClassParams& cp);

enum class Verdict { Holds, Fails, DivergentPremise };

std::string_view verdict_name(Verdict v);

struct CriterionReport {
    TheoremId theorem = TheoremId::ST1;
    double lhs = 0.0;          // derived reconstruction of the displayed left side
    double rhs = 0.0;
    double printed_lhs = 0.0;  // the display transcribed verbatim
    std::optional<bool> holds; // defined only when the premise converges
    double premise_exponent = 0.0;
    bool premise_convergent = false;
    std::optional<bool> printed_matches_derived;
    Verdict verdict = Verdict::Fails;
    std::string notes;
};

// Evaluates one criterion at (p, cp) with alpha = |a| throughout. Divergent
// premises are a verdict, not an error; parameter and pole problems throw.
CriterionReport criterion(TheoremId id, const Params& p, const ClassParams& cp);

// The premise statistic T bounded by the proof, recovered from the derived
// lhs by undoing the theorem's rearrangement (additive constants and the
// 2(1-beta) factor). Comparable against weighted_coefficient_sum.
double premise_statistic_from_lhs(TheoremId id, double lhs, const Params& p,
                                  const ClassParams& cp);

// Direct coefficient-sum membership test on a concrete series:
// sum_{n=2}^{N} w(n) |a_n| against the class threshold
// (lambda, lambda, 1/3, 1).
struct CoefficientSumVerdict {
    double statistic = 0.0;
    double threshold = 0.0;
    bool holds = false;
};

CoefficientSumVerdict coefficient_sum_test(GeometricClass cls, const TaylorSeries& f,
                                           const ClassParams& cp, std::size_t n_max);

} // namespace clausen
