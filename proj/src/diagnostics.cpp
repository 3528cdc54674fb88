#include "ricci/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ricci::diagnostics {

namespace {

constexpr double twoPi = 2.0 * std::numbers::pi;

// Derivative at x2 of the quadratic through three (possibly non-uniform)
// points, evaluated at the last one.
double quadratic_endpoint_derivative(double x0, double y0, double x1, double y1,
                                     double x2, double y2) {
    return y0 * (x2 - x1) / ((x0 - x1) * (x0 - x2)) +
           y1 * (x2 - x0) / ((x1 - x0) * (x1 - x2)) +
           y2 * (2.0 * x2 - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

// One-sided O(h^2) derivative at the last sample of a uniform-grid array.
double one_sided_boundary_derivative(const std::vector<double>& y, double h) {
    const size_t N = y.size() - 1;
    return (3.0 * y[N] - 4.0 * y[N - 1] + y[N - 2]) / (2.0 * h);
}

struct StateGeometry {
    std::vector<double> rhoG;  // arclength of g = u*g0 (non-uniform)
    std::vector<double> F;     // warping sqrt(u)*f0
    std::vector<double> R;     // curvature of the state
};

StateGeometry state_geometry(const ConformalState& s) {
    StateGeometry g;
    const size_t n = s.u.size();
    std::vector<double> sqrtU(n);
    for (size_t i = 0; i < n; ++i) sqrtU[i] = std::sqrt(s.u[i]);
    g.rhoG = detail::cumtrapz(sqrtU, s.base.h);
    g.F.resize(n);
    for (size_t i = 0; i < n; ++i) g.F[i] = sqrtU[i] * s.base.f[i];
    g.R = curvature_of_state(s).R;
    return g;
}

double boundary_curvature_derivative(const StateGeometry& g) {
    const size_t N = g.R.size() - 1;
    return quadratic_endpoint_derivative(g.rhoG[N - 2], g.R[N - 2],
                                         g.rhoG[N - 1], g.R[N - 1],
                                         g.rhoG[N], g.R[N]);
}

double w_max_of(const StateGeometry& g) {
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < g.R.size(); ++i) {
        const double dR =
            (g.R[i + 1] - g.R[i - 1]) / (g.rhoG[i + 1] - g.rhoG[i - 1]);
        worst = std::max(worst, g.F[i] * dR);
    }
    return worst;
}

} // namespace

CurvatureStats curvature_stats(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    CurvatureStats out;
    out.rMax = *std::max_element(cf.R.begin(), cf.R.end());
    out.rMin = *std::min_element(cf.R.begin(), cf.R.end());
    std::vector<double> integrand(cf.R.size());
    for (size_t i = 0; i < cf.R.size(); ++i) integrand[i] = cf.R[i] * m.f[i];
    const double area = twoPi * detail::trapz(m.f, m.h);
    out.rAvg = twoPi * detail::trapz(integrand, m.h) / area;
    return out;
}

PotentialFunction potential_function(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    const int N = m.intervals();
    PotentialFunction out;

    std::vector<double> Rf(N + 1);
    for (int i = 0; i <= N; ++i) Rf[i] = cf.R[i] * m.f[i];
    const double area = detail::trapz(m.f, m.h);
    out.rAvg = detail::trapz(Rf, m.h) / area;

    // F f'(rho) = int_0^rho (R - rAvg) F; the same trapezoid defines rAvg,
    // so the flux vanishes identically at rho = L.
    std::vector<double> g(N + 1);
    for (int i = 0; i <= N; ++i) g[i] = (cf.R[i] - out.rAvg) * m.f[i];
    const std::vector<double> flux = detail::cumtrapz(g, m.h);
    out.fprime.resize(N + 1);
    out.fprime[0] = 0.0;
    for (int i = 1; i <= N; ++i) out.fprime[i] = flux[i] / m.f[i];

    out.f = detail::cumtrapz(out.fprime, m.h);
    std::vector<double> fF(N + 1);
    for (int i = 0; i <= N; ++i) fF[i] = out.f[i] * m.f[i];
    const double mean = detail::trapz(fF, m.h) / area;
    for (double& v : out.f) v -= mean;
    return out;
}

std::vector<double> h_function(const RadialMetric& m,
                               const PotentialFunction& pot) {
    const CurvatureField cf = scalar_curvature(m);
    if (pot.f.size() != m.f.size())
        fail(ErrorCode::InvalidArgument, "potential not on the metric grid");
    std::vector<double> h(m.f.size());
    for (size_t i = 0; i < h.size(); ++i)
        h[i] = (cf.R[i] - pot.rAvg) + pot.fprime[i] * pot.fprime[i];
    return h;
}

double boundary_identity_residual(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    const double dR = one_sided_boundary_derivative(cf.R, m.h);
    const double k = boundary_geodesic_curvature(m);
    return std::abs(dR - k * cf.R.back());
}

double boundary_identity_residual(const ConformalState& s) {
    const StateGeometry g = state_geometry(s);
    return std::abs(boundary_curvature_derivative(g) - s.k0 * g.R.back());
}

double radial_w_max(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < cf.R.size(); ++i) {
        const double dR = (cf.R[i + 1] - cf.R[i - 1]) / (2.0 * m.h);
        worst = std::max(worst, m.f[i] * dR);
    }
    return worst;
}

double radial_w_max(const ConformalState& s) {
    return w_max_of(state_geometry(s));
}

double shi_ratio(const Trajectory& traj, int index) {
    if (index < 1 || index >= static_cast<int>(traj.snapshots.size()))
        fail(ErrorCode::InvalidArgument, "shi ratio needs a t > 0 snapshot");
    ConformalState s = initialize(traj.base);
    s.u = traj.snapshots[index].u;
    s.t = traj.snapshots[index].t;
    double sup = 1.0;
    for (int j = 0; j <= index; ++j) sup = std::max(sup, traj.records[j].rMax);
    const StateGeometry g = state_geometry(s);
    return std::sqrt(s.t) * std::abs(boundary_curvature_derivative(g)) / sup;
}

RatioTrend ratio_trend(const Trajectory& traj) {
    if (traj.records.size() < 2)
        fail(ErrorCode::InvalidArgument, "ratio trend needs >= 2 records");
    RatioTrend out;
    out.series.reserve(traj.records.size());
    for (const auto& rec : traj.records)
        out.series.emplace_back(rec.t, rec.rMax / rec.rMin);
    const double tLast = out.series.back().first;
    const double tFirst = out.series.front().first;
    const double windowStart = tLast - 0.1 * (tLast - tFirst);
    out.finalWindowMin = std::numeric_limits<double>::infinity();
    for (const auto& [t, ratio] : out.series)
        if (t >= windowStart)
            out.finalWindowMin = std::min(out.finalWindowMin, ratio);
    return out;
}

DiagnosticsRecord make_record(const ConformalState& s, double supRmax) {
    DiagnosticsRecord rec;
    rec.t = s.t;

    const StateGeometry g = state_geometry(s);
    rec.rMax = *std::max_element(g.R.begin(), g.R.end());
    rec.rMin = *std::min_element(g.R.begin(), g.R.end());

    // Conformal identities: dA = u dA0 and R*u = R0 - lap, so the curvature
    // integral reduces to a base-grid quadrature.
    const size_t n = s.u.size();
    std::vector<double> uF(n), RuF(n);
    for (size_t i = 0; i < n; ++i) {
        uF[i] = s.u[i] * s.base.f[i];
        RuF[i] = g.R[i] * uF[i];
    }
    rec.area = twoPi * detail::trapz(uF, s.base.h);
    rec.boundaryLength = twoPi * g.F.back();
    rec.rAvg = twoPi * detail::trapz(RuF, s.base.h) / rec.area;

    const RadialMetric realized = realize_conformal(s.base, s.u);
    rec.isoRatio = isoperimetric_infimum(realized).value;
    rec.kMeasured = boundary_geodesic_curvature(realized);
    rec.wMax = w_max_of(g);

    const double dRnu = boundary_curvature_derivative(g);
    rec.boundaryIdentityResidual = std::abs(dRnu - s.k0 * g.R.back());
    if (s.t > 0.0)
        rec.shiRatio =
            std::sqrt(s.t) * std::abs(dRnu) / std::max(1.0, supRmax);
    return rec;
}

void fill_area_rate_residuals(std::vector<DiagnosticsRecord>& records,
                              double k0) {
    for (size_t j = 1; j + 1 < records.size(); ++j) {
        const double dt = records[j + 1].t - records[j - 1].t;
        if (!(dt > 0.0)) continue;
        const double dA = (records[j + 1].area - records[j - 1].area) / dt;
        // Gauss-Bonnet for u_t = -R u: dA/dt = -int R dV = -4 pi + 2 k0 l.
        const double rhs = -2.0 * twoPi + 2.0 * k0 * records[j].boundaryLength;
        records[j].areaRateResidual =
            std::abs(dA - rhs) / std::max(std::abs(rhs), 1e-12);
    }
}

} // namespace ricci::diagnostics
