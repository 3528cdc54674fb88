#include "ricci/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ricci/diagnostics.hpp"

namespace ricci::family {

void FamilyParams::validate() const {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        fail(ErrorCode::InvalidArgument, "epsilon outside (0, 1)");
    if (!(bracketLo < bracketHi) || !(tol > 0.0))
        fail(ErrorCode::InvalidArgument, "bad bracket or tolerance");
}

double boundary_equation_lhs(double epsilon, double r) {
    return epsilon * r * std::cos(r) - 2.0 * epsilon * std::sin(r) -
           (1.0 - epsilon) * std::cos(r) * std::sin(r);
}

double profile(double epsilon, double r) {
    return (1.0 - epsilon) * std::sin(r) + epsilon * r;
}

double profile_deriv(double epsilon, double r) {
    return (1.0 - epsilon) * std::cos(r) + epsilon;
}

RootCertificate family_boundary_radius(const FamilyParams& p) {
    p.validate();

    // Certify a sign change by scanning before bisecting; the bracket
    // endpoints are not assumed to have opposite signs.
    constexpr int scanPoints = 4096;
    double lo = p.bracketLo;
    double flo = boundary_equation_lhs(p.epsilon, lo);
    double hi = 0.0, fhi = 0.0;
    bool found = false;
    for (int i = 1; i <= scanPoints; ++i) {
        const double x =
            p.bracketLo + (p.bracketHi - p.bracketLo) * i / scanPoints;
        const double fx = boundary_equation_lhs(p.epsilon, x);
        if (flo == 0.0 || flo * fx <= 0.0) {
            hi = x;
            fhi = fx;
            found = true;
            break;
        }
        lo = x;
        flo = fx;
    }
    if (!found)
        fail(ErrorCode::NoRoot,
             "no sign change of the boundary-radius equation in [" +
                 std::to_string(p.bracketLo) + ", " +
                 std::to_string(p.bracketHi) + "]; endpoint values " +
                 std::to_string(boundary_equation_lhs(p.epsilon, p.bracketLo)) +
                 ", " +
                 std::to_string(boundary_equation_lhs(p.epsilon, p.bracketHi)));

    RootCertificate cert;
    cert.bracketLo = lo;
    cert.bracketHi = hi;
    while (hi - lo > p.tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = boundary_equation_lhs(p.epsilon, mid);
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    cert.r0 = std::abs(flo) < std::abs(fhi) ? lo : hi;
    cert.residual = std::abs(boundary_equation_lhs(p.epsilon, cert.r0));

    if (!(profile_deriv(p.epsilon, cert.r0) < 0.0))
        fail(ErrorCode::NoRoot,
             "root at r0 = " + std::to_string(cert.r0) +
                 " does not have f'(r0) < 0");
    return cert;
}

RadialMetric family_metric(const FamilyParams& p, int N) {
    if (N < 16) fail(ErrorCode::InvalidArgument, "family grid N < 16");
    const RootCertificate cert = family_boundary_radius(p);
    RadialMetric m;
    m.h = cert.r0 / N;
    m.f.resize(N + 1);
    for (int i = 0; i <= N; ++i) m.f[i] = profile(p.epsilon, m.h * i);
    m.f[0] = 0.0;
    return m;
}

P1P2Report verify_P1_P2(const RadialMetric& m) {
    const CurvatureField cf = scalar_curvature(m);
    P1P2Report report;
    report.maxViolation = -std::numeric_limits<double>::infinity();
    bool positive = true;
    for (size_t i = 0; i < cf.R.size(); ++i) {
        if (!(cf.R[i] > 0.0)) positive = false;
        if (i >= 1 && i + 1 < cf.R.size()) {
            const double dR = (cf.R[i + 1] - cf.R[i - 1]) / (2.0 * m.h);
            report.maxViolation = std::max(report.maxViolation, dR);
        }
    }
    report.p1 = positive && report.maxViolation <= 10.0 * m.h;
    report.p2Residual = diagnostics::boundary_identity_residual(m);
    return report;
}

} // namespace ricci::family
