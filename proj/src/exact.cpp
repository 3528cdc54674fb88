#include "ricci/exact.hpp"

#include <cmath>
#include <numbers>

namespace ricci::exact {

namespace {

RadialMetric sample_profile(double L, int N, auto&& fn) {
    if (!(L > 0.0) || N < 16)
        fail(ErrorCode::InvalidArgument, "profile needs L > 0 and N >= 16");
    RadialMetric m;
    m.h = L / N;
    m.f.resize(N + 1);
    for (int i = 0; i <= N; ++i) m.f[i] = fn(m.h * i);
    m.f[0] = 0.0;
    return m;
}

} // namespace

RadialMetric cigar_metric(double L, int N) {
    return sample_profile(L, N, [](double rho) { return std::tanh(rho); });
}

RadialMetric spherical_cap_metric(double K, double rhoMax, int N) {
    if (!(K > 0.0))
        fail(ErrorCode::InvalidArgument, "cap curvature must be positive");
    const double sqrtK = std::sqrt(K);
    if (!(rhoMax > 0.0) || rhoMax > std::numbers::pi / sqrtK)
        fail(ErrorCode::DomainError, "cap radius outside (0, pi/sqrt(K)]");
    return sample_profile(rhoMax, N, [sqrtK](double rho) {
        return std::sin(sqrtK * rho) / sqrtK;
    });
}

RadialMetric flat_disk_metric(double rho0, int N) {
    return sample_profile(rho0, N, [](double rho) { return rho; });
}

RadialMetric hemisphere_metric(int N) {
    return spherical_cap_metric(1.0, std::numbers::pi / 2.0, N);
}

ShrinkingCap shrinking_cap_oracle(double R0, double t) {
    if (t < 0.0 || t >= 1.0 / R0)
        fail(ErrorCode::DomainError, "time past the blow-up T = 1/R0");
    return {1.0 - R0 * t, R0 / (1.0 - R0 * t)};
}

double cigar_curvature(double rho) {
    const double s = 1.0 / std::cosh(rho);
    return 4.0 * s * s;
}

double cigar_annulus_area(double r1, double r2) {
    // 2*pi * int_{r1}^{r2} tanh = 2*pi*(log cosh r2 - log cosh r1), written
    // through log1p to stay accurate for large radii.
    auto logcosh = [](double x) {
        return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
    };
    return 2.0 * std::numbers::pi * (logcosh(r2) - logcosh(r1));
}

} // namespace ricci::exact
