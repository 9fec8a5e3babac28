#pragma once

#include <cstddef>
#include <vector>

#include "clausen/criteria.hpp"
#include "clausen/params.hpp"
#include "clausen/series.hpp"

namespace clausen {

// Sampling grid z = r e^{i theta}: increasing radii in (0, r_max] with
// r_max <= 0.999, and M >= 8 equally spaced angles in [0, 2pi).
struct DiscGrid {
    std::vector<double> radii;
    std::size_t angles = 0;

    DiscGrid(std::vector<double> radii_, std::size_t angles_);

    static DiscGrid uniform(std::size_t n_radii, double r_max, std::size_t angles);
};

// Truncated polynomial and its first two derivatives at z (Horner), plus
// the profile-based bound on the dropped tail sum_{n>N} bound(n) |z|^n.
struct SeriesJet {
    cplx f;
    cplx fp;
    cplx fpp;
    double truncation_bound = 0.0;  // 0 when no profile is supplied
};

SeriesJet series_eval012(const TaylorSeries& f, cplx z,
                         const CoefficientProfile* profile = nullptr);

// Minimum membership margin over the grid. Margins per point:
//   S*_lambda : lambda - |z f'/f - 1|
//   C_lambda  : lambda - |z f''/f'|        (= S*_lambda margin of z f')
//   UCV       : Re(1 + z f''/f') - |z f''/f'|
//   S_p       : Re(z f'/f) - |z f'/f - 1|
// Membership of the truncation is falsified when min_margin < -tol; a
// positive margin is evidence only (see truncation_bound).
struct DiscMarginReport {
    GeometricClass cls = GeometricClass::StarlikeLambda;
    double min_margin = 0.0;
    double argmin_r = 0.0;
    double argmin_theta = 0.0;
    double truncation_bound = 0.0;
    std::size_t skipped_points = 0;  // samples with |denominator| < 1e-14
};

DiscMarginReport class_margin(GeometricClass cls, const TaylorSeries& f,
                              const DiscGrid& grid, const ClassParams& cp,
                              const CoefficientProfile* profile = nullptr);

// phi(z) = 1 + (2/pi^2) (log((1+sqrt z)/(1-sqrt z)))^2, the conformal map
// of the disc onto the parabolic region {w : Re w > |w - 1|}; principal
// branches.
cplx parabola_map(cplx z);

} // namespace clausen
