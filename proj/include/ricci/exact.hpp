#pragma once

#include "ricci/geometry.hpp"

namespace ricci::exact {

/// Truncated cigar soliton in geodesic polar form, f(rho) = tanh(rho).
RadialMetric cigar_metric(double L, int N);

/// Constant-curvature cap f(rho) = sin(sqrt(K) rho)/sqrt(K); the hemisphere
/// is rhoMax = pi/(2 sqrt(K)). rhoMax past the equatorless bound pi/sqrt(K)
/// is a domain error.
RadialMetric spherical_cap_metric(double K, double rhoMax, int N);

/// Flat disk f(rho) = rho; the stationary profile of the boundary-value flow.
RadialMetric flat_disk_metric(double rho0, int N);

/// Hemisphere of curvature 2 (the standard blow-up oracle base).
RadialMetric hemisphere_metric(int N);

struct ShrinkingCap {
    double u = 1.0;  ///< spatially constant conformal factor
    double R = 0.0;  ///< curvature R0/(1 - R0 t)
};

/// Exact solution of the spatially constant curvature ODE R' = R^2:
/// u(t) = 1 - R0 t. Valid for 0 <= t < 1/R0.
ShrinkingCap shrinking_cap_oracle(double R0, double t);

/// Curvature of the cigar at geodesic radius rho, R = 4 sech^2(rho).
double cigar_curvature(double rho);

/// Annulus area A(r1, r2) on the cigar, 2*pi*(log cosh r2 - log cosh r1).
double cigar_annulus_area(double r1, double r2);

} // namespace ricci::exact
