#pragma once

#include <utility>
#include <vector>

#include "ricci/flow.hpp"
#include "ricci/geometry.hpp"

namespace ricci::diagnostics {

struct CurvatureStats {
    double rMax = 0.0;
    double rMin = 0.0;
    double rAvg = 0.0;
};

CurvatureStats curvature_stats(const RadialMetric& m);

struct PotentialFunction {
    std::vector<double> f;       ///< mean-zero Neumann solution of Delta f = R - r
    std::vector<double> fprime;  ///< radial derivative, fprime(L) = 0 identically
    double rAvg = 0.0;
};

/// Radial quadrature of Delta f = R - rAvg with df/dnu = 0 and
/// area-weighted mean zero.
PotentialFunction potential_function(const RadialMetric& m);

/// h = Delta f + |grad f|^2 = (R - rAvg) + fprime^2; equals R - rAvg on the
/// boundary.
std::vector<double> h_function(const RadialMetric& m,
                               const PotentialFunction& pot);

/// |dR/dnu - k_g R| at the boundary node, one-sided O(h^2) stencil.
double boundary_identity_residual(const RadialMetric& m);
double boundary_identity_residual(const ConformalState& s);

/// Max over interior nodes of w = F * dR/drho (arclength parameterization).
double radial_w_max(const RadialMetric& m);
double radial_w_max(const ConformalState& s);

/// sqrt(t) |dR/dnu|_boundary / max(1, sup_{[0,t]} R_max). Needs t > 0.
double shi_ratio(const Trajectory& traj, int index);

struct RatioTrend {
    std::vector<std::pair<double, double>> series;  ///< (t, rMax/rMin)
    double finalWindowMin = 0.0;  ///< min over the last 10% of recorded times
};

RatioTrend ratio_trend(const Trajectory& traj);

/// Full per-snapshot record; supRmax is the running sup of R_max over [0,t]
/// (the shi denominator). tNormalized, areaRateResidual and mu stay NaN.
DiagnosticsRecord make_record(const ConformalState& s, double supRmax);

/// Post-run pass: centered d(area)/dt against -2*pi + k0*l(t), relative.
void fill_area_rate_residuals(std::vector<DiagnosticsRecord>& records,
                              double k0);

} // namespace ricci::diagnostics
