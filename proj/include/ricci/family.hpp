#pragma once

#include <numbers>

#include "ricci/geometry.hpp"

namespace ricci::family {

/// Parameters for the interpolated sphere/cone family
/// f_eps(r) = (1 - eps) sin r + eps r.
struct FamilyParams {
    double epsilon = 0.05;  ///< in (0, 1)
    double bracketLo = std::numbers::pi / 2.0;
    double bracketHi = std::numbers::pi;
    double tol = 1e-12;

    void validate() const;
};

/// Left-hand side of the boundary-radius equation
/// eps r cos r - 2 eps sin r - (1 - eps) cos r sin r = 0.
double boundary_equation_lhs(double epsilon, double r);

double profile(double epsilon, double r);        ///< f_eps(r)
double profile_deriv(double epsilon, double r);  ///< f_eps'(r)

struct RootCertificate {
    double r0 = 0.0;
    double bracketLo = 0.0;  ///< certified sign-change pair
    double bracketHi = 0.0;
    double residual = 0.0;   ///< |LHS(r0)|
};

/// Scans the bracket for a sign change, bisects to tol, and checks
/// f_eps'(r0) < 0. Throws NoRoot (reporting the endpoint values) when the
/// scan finds no sign change.
RootCertificate family_boundary_radius(const FamilyParams& p);

/// f_eps sampled on [0, r0] with N intervals.
RadialMetric family_metric(const FamilyParams& p, int N);

struct P1P2Report {
    bool p1 = false;          ///< R > 0 and radially nonincreasing
    double maxViolation = 0.0;  ///< largest interior dR/drho
    double p2Residual = 0.0;    ///< |dR/dnu - k_g R| at the boundary
};

P1P2Report verify_P1_P2(const RadialMetric& m);

} // namespace ricci::family
