#include "ricci/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ricci {

namespace detail {

std::vector<double> cumtrapz(const std::vector<double>& y, double h) {
    std::vector<double> out(y.size(), 0.0);
    for (size_t i = 1; i < y.size(); ++i)
        out[i] = out[i - 1] + 0.5 * h * (y[i] + y[i - 1]);
    return out;
}

double trapz(const std::vector<double>& y, double h) {
    double s = 0.0;
    for (size_t i = 1; i < y.size(); ++i) s += 0.5 * h * (y[i] + y[i - 1]);
    return s;
}

std::vector<double> pchip(const std::vector<double>& x,
                          const std::vector<double>& y,
                          const std::vector<double>& xq) {
    const size_t n = x.size();
    if (n < 2 || y.size() != n)
        fail(ErrorCode::InvalidArgument, "pchip: need >= 2 matched samples");

    std::vector<double> delta(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        const double dx = x[i + 1] - x[i];
        if (dx <= 0.0)
            fail(ErrorCode::InvalidArgument, "pchip: abscissae not increasing");
        delta[i] = (y[i + 1] - y[i]) / dx;
    }

    // Fritsch-Carlson slopes: weighted harmonic mean inside monotone runs,
    // zero at local extrema.
    std::vector<double> d(n, 0.0);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] > 0.0) {
            const double h0 = x[i] - x[i - 1];
            const double h1 = x[i + 1] - x[i];
            const double w1 = 2.0 * h1 + h0;
            const double w2 = h1 + 2.0 * h0;
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // Endpoint slopes: one-sided three-point estimate, clipped so the end
    // intervals stay shape preserving.
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
        return s;
    };
    if (n > 2) {
        d[0] = end_slope(x[1] - x[0], x[2] - x[1], delta[0], delta[1]);
        d[n - 1] = end_slope(x[n - 1] - x[n - 2], x[n - 2] - x[n - 3],
                             delta[n - 2], delta[n - 3]);
    }

    std::vector<double> out(xq.size());
    for (size_t q = 0; q < xq.size(); ++q) {
        double xv = std::clamp(xq[q], x.front(), x.back());
        const size_t j = std::min<size_t>(
            n - 2, std::upper_bound(x.begin(), x.end(), xv) - x.begin() - 1);
        const double hj = x[j + 1] - x[j];
        const double t = (xv - x[j]) / hj;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        out[q] = h00 * y[j] + h10 * hj * d[j] + h01 * y[j + 1] + h11 * hj * d[j + 1];
    }
    return out;
}

} // namespace detail

namespace {

// One-sided O(h^2) derivative stencils at the boundary node.
double first_deriv_boundary(const std::vector<double>& f, double h) {
    const size_t N = f.size() - 1;
    return (3.0 * f[N] - 4.0 * f[N - 1] + f[N - 2]) / (2.0 * h);
}

double second_deriv_boundary(const std::vector<double>& f, double h) {
    const size_t N = f.size() - 1;
    return (2.0 * f[N] - 5.0 * f[N - 1] + 4.0 * f[N - 2] - f[N - 3]) / (h * h);
}

} // namespace

void validate_metric(const RadialMetric& m) {
    const int N = m.intervals();
    if (N < 16)
        fail(ErrorCode::MalformedProfile, "metric grid too coarse (N < 16)");
    if (!(m.h > 0.0))
        fail(ErrorCode::MalformedProfile, "nonpositive grid spacing");
    if (std::abs(m.f[0]) > 1e-12 * m.h)
        fail(ErrorCode::MalformedProfile, "f(0) != 0");
    for (int i = 1; i <= N; ++i) {
        if (!std::isfinite(m.f[i]) || m.f[i] <= 0.0)
            fail(ErrorCode::MalformedProfile,
                 "f <= 0 at grid index " + std::to_string(i));
    }
    // f'(0) = 1 up to discretization error; lenient since callers hand in
    // arbitrary resampled profiles.
    const double fp0 = (4.0 * m.f[1] - m.f[2]) / (2.0 * m.h);
    if (std::abs(fp0 - 1.0) > 0.05)
        fail(ErrorCode::MalformedProfile, "f'(0) != 1 at the pole");
}

CurvatureField scalar_curvature(const RadialMetric& m) {
    validate_metric(m);
    const int N = m.intervals();
    const double h = m.h;
    const auto& f = m.f;
    CurvatureField out;
    out.R.resize(N + 1);

    // Pole: R(0) = -2 f'''(0); odd extension collapses the centered third
    // difference to (f(2h) - 2 f(h))/h^3.
    out.R[0] = -2.0 * (f[2] - 2.0 * f[1]) / (h * h * h);
    for (int i = 1; i < N; ++i) {
        const double fpp = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
        out.R[i] = -2.0 * fpp / f[i];
    }
    out.R[N] = -2.0 * second_deriv_boundary(f, h) / f[N];

    for (int i = 0; i <= N; ++i) {
        if (!std::isfinite(out.R[i]))
            fail(ErrorCode::MalformedProfile,
                 "non-finite curvature at grid index " + std::to_string(i));
    }
    return out;
}

double boundary_geodesic_curvature(const RadialMetric& m) {
    validate_metric(m);
    return first_deriv_boundary(m.f, m.h) / m.f.back();
}

AreaProfile area_and_lengths(const RadialMetric& m) {
    validate_metric(m);
    constexpr double twoPi = 2.0 * std::numbers::pi;
    AreaProfile out;
    out.ballArea = detail::cumtrapz(m.f, m.h);
    out.circleLength.resize(m.f.size());
    for (size_t i = 0; i < m.f.size(); ++i) {
        out.ballArea[i] *= twoPi;
        out.circleLength[i] = twoPi * m.f[i];
    }
    out.area = out.ballArea.back();
    out.boundaryLength = out.circleLength.back();
    return out;
}

IsoperimetricInfimum isoperimetric_infimum(const RadialMetric& m) {
    const AreaProfile ap = area_and_lengths(m);
    const int N = m.intervals();
    IsoperimetricInfimum best;
    best.value = std::numeric_limits<double>::infinity();
    for (int i = 4; i <= N; ++i) {
        const double ratio =
            ap.circleLength[i] * ap.circleLength[i] / ap.ballArea[i];
        if (ratio < best.value) {
            best.value = ratio;
            best.argminRho = m.rho(i);
        }
    }
    return best;
}

double fermi_riccati_residual(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    const int N = m.intervals();
    const double h = m.h;
    const double L = m.radius();

    // k at interior nodes, centered f'.
    std::vector<double> k(N + 1, 0.0);
    for (int i = 1; i < N; ++i)
        k[i] = (m.f[i + 1] - m.f[i - 1]) / (2.0 * h * m.f[i]);
    k[N] = first_deriv_boundary(m.f, h) / m.f[N];

    double worst = 0.0;
    for (int i = 2; i <= N - 2; ++i) {
        const double s = L - m.rho(i);
        if (s > 0.5 * L) continue;
        // s = L - rho, so d/ds = -d/drho.
        const double dk_ds = -(k[i + 1] - k[i - 1]) / (2.0 * h);
        worst = std::max(worst,
                         std::abs(dk_ds - k[i] * k[i] - 0.5 * cf.R[i]));
    }
    return worst;
}

RadialMetric realize_conformal(const RadialMetric& base,
                               const std::vector<double>& u) {
    validate_metric(base);
    if (u.size() != base.f.size())
        fail(ErrorCode::InvalidArgument,
             "conformal factor not aligned with base grid");
    for (size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] > 0.0))
            fail(ErrorCode::PositivityLost,
                 "conformal factor <= 0 at grid index " + std::to_string(i));
    }

    const int N = base.intervals();
    std::vector<double> sqrtU(u.size());
    for (size_t i = 0; i < u.size(); ++i) sqrtU[i] = std::sqrt(u[i]);

    std::vector<double> rhoG = detail::cumtrapz(sqrtU, base.h);
    std::vector<double> F(u.size());
    for (size_t i = 0; i < u.size(); ++i) F[i] = sqrtU[i] * base.f[i];

    const double Lg = rhoG.back();
    const double hg = Lg / N;
    std::vector<double> grid(N + 1);
    for (int i = 0; i <= N; ++i) grid[i] = hg * i;

    RadialMetric out;
    out.h = hg;
    out.f = detail::pchip(rhoG, F, grid);
    out.f[0] = 0.0;
    out.f[N] = F.back();
    return out;
}

RadialMetric metric_scale(const RadialMetric& m, double lambda) {
    if (!(lambda > 0.0))
        fail(ErrorCode::InvalidArgument, "scale factor must be positive");
    RadialMetric out;
    out.h = lambda * m.h;
    out.f.resize(m.f.size());
    for (size_t i = 0; i < m.f.size(); ++i) out.f[i] = lambda * m.f[i];
    return out;
}

} // namespace ricci
