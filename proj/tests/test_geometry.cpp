#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ricci/exact.hpp"
#include "ricci/geometry.hpp"

using namespace ricci;

namespace {

constexpr double pi = std::numbers::pi;

RadialMetric sampled(double L, int N, double (*f)(double)) {
    RadialMetric m;
    m.h = L / N;
    m.f.resize(N + 1);
    for (int i = 0; i <= N; ++i) m.f[i] = f(m.rho(i));
    return m;
}

// Concave profile with f(0) = 0, f'(0) = 1, f'' = -q <= 0, so R = 2q/f >= 0.
// q is a random nonnegative cosine series with int_0^L q < 0.9 (keeps f' > 0).
RadialMetric random_concave(std::mt19937_64& rng, int N) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double L = 1.0 + unif(rng);
    const int modes = 3;
    double amp[modes];
    double total = 0.0;
    for (int k = 0; k < modes; ++k) total += (amp[k] = unif(rng));
    const double budget = 0.9 / (L * total);
    RadialMetric m;
    m.h = L / N;
    m.f.resize(N + 1);
    // f' by cumulative trapezoid of -q, then f by cumulative trapezoid of f'.
    std::vector<double> fp(N + 1, 1.0);
    auto q = [&](double rho) {
        double s = 0.0;
        for (int k = 0; k < modes; ++k)
            s += amp[k] * budget * (1.0 + std::cos((k + 1) * pi * rho / L));
        return 0.5 * s;
    };
    for (int i = 1; i <= N; ++i)
        fp[i] = fp[i - 1] - 0.5 * m.h * (q(m.rho(i - 1)) + q(m.rho(i)));
    m.f[0] = 0.0;
    for (int i = 1; i <= N; ++i)
        m.f[i] = m.f[i - 1] + 0.5 * m.h * (fp[i - 1] + fp[i]);
    validate_metric(m);
    return m;
}

} // namespace

TEST_CASE("validate_metric rejects malformed profiles") {
    RadialMetric m = exact::flat_disk_metric(1.0, 64);
    CHECK_NOTHROW(validate_metric(m));

    RadialMetric bad = m;
    bad.f[0] = 0.1;
    CHECK_THROWS_AS(validate_metric(bad), Error);
    bad = m;
    bad.f[32] = -1.0;
    CHECK_THROWS_AS(validate_metric(bad), Error);
    bad = m;
    bad.f.resize(8);
    CHECK_THROWS_AS(validate_metric(bad), Error);
    bad = m;
    for (auto& v : bad.f) v *= 2.0;  // f'(0) = 2
    CHECK_THROWS_AS(validate_metric(bad), Error);
}

TEST_CASE("scalar curvature of the constant-curvature cap is 2K") {
    for (double K : {0.5, 1.0, 2.0}) {
        const RadialMetric m = exact::spherical_cap_metric(K, 0.9 * pi / (2 * std::sqrt(K)), 256);
        const CurvatureField R = scalar_curvature(m);
        for (double v : R.R) CHECK(v == doctest::Approx(2.0 * K).epsilon(1e-4));
    }
}

TEST_CASE("scalar curvature converges at second order on the cigar") {
    // Oracle: R = 4 sech^2(rho), nonvanishing higher derivatives.
    auto max_err = [](int N) {
        const RadialMetric m = exact::cigar_metric(3.0, N);
        const CurvatureField R = scalar_curvature(m);
        double e = 0.0;
        for (size_t i = 0; i < R.R.size(); ++i)
            e = std::max(e, std::abs(R.R[i] - exact::cigar_curvature(m.rho(static_cast<int>(i)))));
        return e;
    };
    const double e1 = max_err(128), e2 = max_err(256);
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);
}

TEST_CASE("boundary geodesic curvature matches closed forms") {
    const RadialMetric disk = exact::flat_disk_metric(2.0, 128);
    CHECK(boundary_geodesic_curvature(disk) == doctest::Approx(0.5).epsilon(1e-10));

    const RadialMetric cigar = exact::cigar_metric(3.0, 512);
    const double k = std::pow(1.0 / std::cosh(3.0), 2) / std::tanh(3.0);
    CHECK(boundary_geodesic_curvature(cigar) == doctest::Approx(k).epsilon(1e-5));

    const RadialMetric hemi = exact::hemisphere_metric(256);
    CHECK(std::abs(boundary_geodesic_curvature(hemi)) < 1e-4);
}

TEST_CASE("area and boundary length against closed forms") {
    const RadialMetric disk = exact::flat_disk_metric(1.5, 512);
    const AreaProfile a = area_and_lengths(disk);
    CHECK(a.area == doctest::Approx(pi * 1.5 * 1.5).epsilon(1e-10));
    CHECK(a.boundaryLength == doctest::Approx(2 * pi * 1.5).epsilon(1e-12));
    CHECK(a.ballArea.size() == disk.f.size());
    CHECK(a.circleLength.back() == doctest::Approx(a.boundaryLength));

    // Hemisphere of the unit sphere: area 2*pi.
    const RadialMetric hemi = exact::hemisphere_metric(1024);
    CHECK(area_and_lengths(hemi).area == doctest::Approx(2 * pi).epsilon(1e-6));

    // Cigar annulus area against the closed form.
    const RadialMetric cigar = exact::cigar_metric(8.0, 4096);
    const AreaProfile ac = area_and_lengths(cigar);
    const int i1 = 1024, i2 = 3072;  // rho = 2 and rho = 6
    CHECK(ac.ballArea[i2] - ac.ballArea[i1] ==
          doctest::Approx(exact::cigar_annulus_area(2.0, 6.0)).epsilon(1e-6));
}

TEST_CASE("isoperimetric infimum sits at the boundary for caps") {
    // l^2/A = 2*pi*(1 + cos rho) on the unit cap: strictly decreasing.
    const RadialMetric cap = exact::spherical_cap_metric(1.0, 1.4, 512);
    const IsoperimetricInfimum iso = isoperimetric_infimum(cap);
    CHECK(iso.argminRho == doctest::Approx(cap.radius()));
    CHECK(iso.value == doctest::Approx(2 * pi * (1 + std::cos(1.4))).epsilon(1e-4));
}

TEST_CASE("randomized concave profiles attain the infimum at the boundary") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; ++trial) {
        const RadialMetric m = random_concave(rng, 256);
        const AreaProfile a = area_and_lengths(m);
        const IsoperimetricInfimum iso = isoperimetric_infimum(m);
        const double atBoundary =
            a.circleLength.back() * a.circleLength.back() / a.ballArea.back();
        CHECK(std::abs(iso.value - atBoundary) < 1e-12 * (1.0 + atBoundary));
    }
}

TEST_CASE("fermi riccati residual vanishes at second order") {
    for (auto make : {+[](int N) { return exact::hemisphere_metric(N); },
                      +[](int N) { return exact::cigar_metric(4.0, N); }}) {
        const double e1 = fermi_riccati_residual(make(128));
        const double e2 = fermi_riccati_residual(make(256));
        CHECK(e1 / e2 > 3.0);
        CHECK(e1 / e2 < 5.0);
    }
}

TEST_CASE("metric_scale is an exact homothety") {
    const RadialMetric m = exact::cigar_metric(3.0, 128);
    const double lambda = 2.5;
    const RadialMetric s = metric_scale(m, lambda);
    CHECK(s.h == doctest::Approx(lambda * m.h).epsilon(1e-15));
    for (size_t i = 0; i < m.f.size(); ++i)
        CHECK(s.f[i] == doctest::Approx(lambda * m.f[i]).epsilon(1e-15));

    // Covariance: R scales by 1/lambda^2, areas by lambda^2, iso invariant.
    const CurvatureField R0 = scalar_curvature(m), R1 = scalar_curvature(s);
    for (size_t i = 0; i < R0.R.size(); ++i)
        CHECK(R1.R[i] == doctest::Approx(R0.R[i] / (lambda * lambda)).epsilon(1e-12));
    CHECK(area_and_lengths(s).area ==
          doctest::Approx(lambda * lambda * area_and_lengths(m).area).epsilon(1e-12));
    CHECK(isoperimetric_infimum(s).value ==
          doctest::Approx(isoperimetric_infimum(m).value).epsilon(1e-12));
    CHECK(boundary_geodesic_curvature(s) ==
          doctest::Approx(boundary_geodesic_curvature(m) / lambda).epsilon(1e-12));
}

TEST_CASE("realize_conformal with u = 1 reproduces the base") {
    const RadialMetric m = exact::spherical_cap_metric(1.0, 1.2, 256);
    const RadialMetric r = realize_conformal(m, std::vector<double>(m.f.size(), 1.0));
    CHECK(r.radius() == doctest::Approx(m.radius()).epsilon(1e-12));
    for (size_t i = 0; i < m.f.size(); ++i)
        CHECK(r.f[i] == doctest::Approx(m.f[i]).epsilon(1e-8));
}

TEST_CASE("realize_conformal with constant u is a homothety") {
    const RadialMetric m = exact::spherical_cap_metric(2.0, 0.9, 256);
    const double c = 4.0;  // u = 4 means lengths double
    const RadialMetric r = realize_conformal(m, std::vector<double>(m.f.size(), c));
    CHECK(r.radius() == doctest::Approx(2.0 * m.radius()).epsilon(1e-10));
    CHECK(area_and_lengths(r).area ==
          doctest::Approx(c * area_and_lengths(m).area).epsilon(1e-6));
}

TEST_CASE("pchip is monotone and interpolatory") {
    const std::vector<double> x = {0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> y = {0.0, 0.1, 2.0, 2.05, 3.0};
    std::vector<double> xq;
    for (int i = 0; i <= 400; ++i) xq.push_back(4.0 * i / 400.0);
    const std::vector<double> yq = detail::pchip(x, y, xq);
    for (size_t i = 1; i < yq.size(); ++i) CHECK(yq[i] >= yq[i - 1] - 1e-14);
    for (size_t k = 0; k < x.size(); ++k)
        CHECK(yq[k * 100] == doctest::Approx(y[k]).epsilon(1e-14));
}
