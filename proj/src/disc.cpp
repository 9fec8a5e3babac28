#include "clausen/disc.hpp"

#include <cmath>
#include <numbers>

namespace clausen {

DiscGrid::DiscGrid(std::vector<double> radii_, std::size_t angles_)
    : radii(std::move(radii_)), angles(angles_) {
    if (radii.empty()) throw invalid_range_error("grid needs at least one radius");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev) || r > 0.999)
            throw invalid_range_error("radii must increase within (0, 0.999]");
        prev = r;
    }
    if (angles < 8) throw invalid_range_error("grid needs at least 8 angles");
}

DiscGrid DiscGrid::uniform(std::size_t n_radii, double r_max, std::size_t angles) {
    if (n_radii == 0) throw invalid_range_error("grid needs at least one radius");
    if (!(r_max > 0.0) || r_max > 0.999)
        throw invalid_range_error("r_max must lie in (0, 0.999]");
    std::vector<double> radii(n_radii);
    for (std::size_t i = 0; i < n_radii; ++i)
        radii[i] = r_max * static_cast<double>(i + 1) / static_cast<double>(n_radii);
    return DiscGrid(std::move(radii), angles);
}

SeriesJet series_eval012(const TaylorSeries& f, cplx z,
                         const CoefficientProfile* profile) {
    const std::size_t n = f.truncation();
    // Coefficients run a_1..a_N with a_0 = 0; triple Horner.
    cplx d0 = f.a(n), d1(0.0, 0.0), d2(0.0, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        d2 = d2 * z + d1;
        d1 = d1 * z + d0;
        d0 = d0 * z + (k >= 1 ? f.a(k) : cplx(0.0, 0.0));
    }
    SeriesJet jet{d0, d1, 2.0 * d2, 0.0};

    if (profile != nullptr) {
        const double r = std::abs(z);
        if (r > 0.0 && r < 1.0) {
            double acc = 0.0;
            double rn = std::pow(r, static_cast<double>(n + 1));
            for (std::size_t k = n + 1; k < n + 2000000; ++k) {
                const double term = profile->bound(k) * rn;
                acc += term;
                if (term <= 1e-18 * (acc + 1e-300)) break;
                rn *= r;
            }
            jet.truncation_bound = acc;
        }
    }
    return jet;
}

namespace {

double point_margin(GeometricClass cls, const SeriesJet& jet, cplx z,
                    const ClassParams& cp, bool& skip) {
    constexpr double kZeroTol = 1e-14;
    skip = false;
    switch (cls) {
        case GeometricClass::StarlikeLambda: {
            if (std::abs(jet.f) < kZeroTol) { skip = true; return 0.0; }
            return cp.lambda - std::abs(z * jet.fp / jet.f - 1.0);
        }
        case GeometricClass::ConvexLambda: {
            if (std::abs(jet.fp) < kZeroTol) { skip = true; return 0.0; }
            return cp.lambda - std::abs(z * jet.fpp / jet.fp);
        }
        case GeometricClass::UCV: {
            if (std::abs(jet.fp) < kZeroTol) { skip = true; return 0.0; }
            const cplx w = z * jet.fpp / jet.fp;
            return 1.0 + w.real() - std::abs(w);
        }
        case GeometricClass::Sp: {
            if (std::abs(jet.f) < kZeroTol) { skip = true; return 0.0; }
            const cplx w = z * jet.fp / jet.f;
            return w.real() - std::abs(w - 1.0);
        }
    }
    skip = true;
    return 0.0;
}

} // namespace

DiscMarginReport class_margin(GeometricClass cls, const TaylorSeries& f,
                              const DiscGrid& grid, const ClassParams& cp,
                              const CoefficientProfile* profile) {
    cp.validate();
    DiscMarginReport rep;
    rep.cls = cls;
    bool have_min = false;

    for (double r : grid.radii) {
        for (std::size_t j = 0; j < grid.angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(grid.angles);
            const cplx z = std::polar(r, theta);
            const SeriesJet jet = series_eval012(f, z, nullptr);
            bool skip = false;
            const double m = point_margin(cls, jet, z, cp, skip);
            if (skip) {
                ++rep.skipped_points;
                continue;
            }
            // Ties keep the lexicographically smallest (r, theta): strict <.
            if (!have_min || m < rep.min_margin) {
                have_min = true;
                rep.min_margin = m;
                rep.argmin_r = r;
                rep.argmin_theta = theta;
            }
        }
    }
    if (!have_min)
        throw zero_encountered_error("every grid sample hit a vanishing denominator");

    if (profile != nullptr) {
        const cplx z_edge(grid.radii.back(), 0.0);
        rep.truncation_bound = series_eval012(f, z_edge, profile).truncation_bound;
    }
    return rep;
}

cplx parabola_map(cplx z) {
    if (z == cplx(0.0, 0.0)) return cplx(1.0, 0.0);
    const cplx s = std::sqrt(z);
    const cplx l = std::log((1.0 + s) / (1.0 - s));
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return 1.0 + (2.0 / pi2) * l * l;
}

} // namespace clausen
