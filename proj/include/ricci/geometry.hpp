#pragma once

#include <cstddef>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

/// Rotationally symmetric metric ds^2 = drho^2 + f(rho)^2 domega^2 on the
/// disk, stored as warping-function samples on a uniform geodesic-radius grid.
struct RadialMetric {
    double h = 0.0;         ///< grid spacing, arclength units
    std::vector<double> f;  ///< f(rho_i), rho_i = i*h, i = 0..N

    int intervals() const { return static_cast<int>(f.size()) - 1; }
    double radius() const { return h * intervals(); }
    double rho(int i) const { return h * i; }
};

/// Scalar-curvature samples aligned with a metric grid (R = 2K).
struct CurvatureField {
    std::vector<double> R;
};

struct AreaProfile {
    double area = 0.0;            ///< total area 2*pi*int f
    double boundaryLength = 0.0;  ///< 2*pi*f(L)
    std::vector<double> ballArea;      ///< area of B_rho at every node
    std::vector<double> circleLength;  ///< length of dB_rho at every node
};

struct IsoperimetricInfimum {
    double value = 0.0;
    double argminRho = 0.0;
};

/// Throws MalformedProfile unless f(0)=0, f'(0)~1, f>0 away from the pole
/// and N >= 16.
void validate_metric(const RadialMetric& m);

/// R_i = -2 f''(rho_i)/f(rho_i); pole entry is the limit -2 f'''(0) taken
/// through the odd extension of f.
CurvatureField scalar_curvature(const RadialMetric& m);

/// f'(L)/f(L), one-sided second-order stencil, outward normal convention.
double boundary_geodesic_curvature(const RadialMetric& m);

AreaProfile area_and_lengths(const RadialMetric& m);

/// Exact discrete minimum of l^2(dB_rho)/A(B_rho) over grid nodes with
/// rho >= 4h (the pole ratio is a 0/0).
IsoperimetricInfimum isoperimetric_infimum(const RadialMetric& m);

/// Max-norm residual of the collar Riccati equation dk/ds = k^2 + R/2,
/// where k(s) = f'(L-s)/f(L-s) and s is the distance to the boundary,
/// over interior nodes with s <= L/2.
double fermi_riccati_residual(const RadialMetric& m);

/// Arclength reparameterization of g = u*g0: rho_g = int sqrt(u), warping
/// sqrt(u)*f0, resampled onto a uniform grid by monotone cubic interpolation.
RadialMetric realize_conformal(const RadialMetric& base,
                               const std::vector<double>& u);

/// Homothety g -> lambda^2 g. Node values map exactly: h -> lambda*h,
/// f_i -> lambda*f_i; no resampling.
RadialMetric metric_scale(const RadialMetric& m, double lambda);

namespace detail {

/// Monotone cubic (Fritsch-Carlson) interpolation of (x, y) at query points.
/// x must be strictly increasing; queries are clamped to [x.front, x.back].
std::vector<double> pchip(const std::vector<double>& x,
                          const std::vector<double>& y,
                          const std::vector<double>& xq);

/// Cumulative trapezoid of samples on a uniform grid with spacing h.
std::vector<double> cumtrapz(const std::vector<double>& y, double h);

double trapz(const std::vector<double>& y, double h);

} // namespace detail

} // namespace ricci
