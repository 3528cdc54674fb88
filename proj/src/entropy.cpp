#include "ricci/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ricci/exact.hpp"

namespace ricci::entropy {

namespace {

constexpr double twoPi = 2.0 * std::numbers::pi;
constexpr double fourPi = 4.0 * std::numbers::pi;

// Trapezoid weights against the area element 2*pi*F drho.
std::vector<double> volume_weights(const RadialMetric& m) {
    std::vector<double> w(m.f.size());
    for (size_t i = 0; i < w.size(); ++i) {
        const double endpoint = (i == 0 || i + 1 == w.size()) ? 0.5 : 1.0;
        w[i] = endpoint * twoPi * m.f[i] * m.h;
    }
    return w;
}

struct WParts {
    double dirichlet = 0.0;  // int |grad Phi|^2 dV (segment midpoints)
    double bulk = 0.0;       // int (tau R - 2 log Phi - 2) Phi^2 dV
    double mass = 0.0;       // int Phi^2 dV
};

WParts w_parts(const RadialMetric& m, const std::vector<double>& R,
               const std::vector<double>& w, const std::vector<double>& phi,
               double tau) {
    WParts p;
    for (size_t i = 0; i + 1 < phi.size(); ++i) {
        const double dphi = (phi[i + 1] - phi[i]) / m.h;
        const double Fmid = 0.5 * (m.f[i] + m.f[i + 1]);
        p.dirichlet += dphi * dphi * twoPi * Fmid * m.h;
    }
    for (size_t i = 0; i < phi.size(); ++i) {
        const double p2 = phi[i] * phi[i];
        p.bulk += w[i] * (tau * R[i] - 2.0 * std::log(phi[i]) - 2.0) * p2;
        p.mass += w[i] * p2;
    }
    return p;
}

double w_value(const WParts& p, double tau) {
    return (4.0 * tau * p.dirichlet + p.bulk) / (fourPi * tau);
}

struct Objective {
    const RadialMetric& m;
    std::vector<double> R;
    std::vector<double> w;
    double tau;

    double mass(const std::vector<double>& phi) const {
        double s = 0.0;
        for (size_t i = 0; i < phi.size(); ++i) s += w[i] * phi[i] * phi[i];
        return s / (fourPi * tau);
    }

    void renormalize(std::vector<double>& phi) const {
        const double c = 1.0 / std::sqrt(mass(phi));
        for (double& v : phi) v = std::max(1e-14, v * c);
    }

    double value(const std::vector<double>& phi) const {
        return w_value(w_parts(m, R, w, phi, tau), tau);
    }

    std::vector<double> gradient(const std::vector<double>& phi) const {
        const size_t n = phi.size();
        std::vector<double> g(n, 0.0);
        for (size_t i = 0; i + 1 < n; ++i) {
            const double Fmid = 0.5 * (m.f[i] + m.f[i + 1]);
            const double coef = 8.0 * tau * twoPi * Fmid / m.h;
            const double d = phi[i + 1] - phi[i];
            g[i] -= coef * d;
            g[i + 1] += coef * d;
        }
        for (size_t i = 0; i < n; ++i) {
            g[i] += 2.0 * w[i] * phi[i] *
                    (tau * R[i] - 2.0 * std::log(phi[i]) - 3.0);
        }
        for (double& v : g) v /= fourPi * tau;
        // Project out the constraint normal (w-weighted direction of phi).
        double gp = 0.0, pp = 0.0;
        for (size_t i = 0; i < n; ++i) {
            gp += w[i] * g[i] * phi[i];
            pp += w[i] * phi[i] * phi[i];
        }
        for (size_t i = 0; i < n; ++i) g[i] -= (gp / pp) * phi[i];
        return g;
    }
};

} // namespace

void EntropyOptions::validate() const {
    if (maxIters < 1 || restarts < 1 || !(stepTol > 0.0) || !(gradTol > 0.0))
        fail(ErrorCode::InvalidArgument, "entropy options must be positive");
}

double f_functional(const RadialMetric& m, const std::vector<double>& f) {
    validate_metric(m);
    if (f.size() != m.f.size())
        fail(ErrorCode::InvalidArgument, "f not on the metric grid");
    const CurvatureField cf = scalar_curvature(m);
    const std::vector<double> w = volume_weights(m);

    // Node-centered f' (centered interior, one-sided ends).
    const size_t N = f.size() - 1;
    double total = 0.0;
    for (size_t i = 0; i <= N; ++i) {
        double fp;
        if (i == 0)
            fp = (f[1] - f[0]) / m.h;
        else if (i == N)
            fp = (f[N] - f[N - 1]) / m.h;
        else
            fp = (f[i + 1] - f[i - 1]) / (2.0 * m.h);
        total += w[i] * (cf.R[i] + fp * fp) * std::exp(-f[i]);
    }
    return total;
}

double w_functional(const RadialMetric& m, const std::vector<double>& phi,
                    double tau) {
    validate_metric(m);
    if (!(tau > 0.0)) fail(ErrorCode::InvalidArgument, "tau must be positive");
    if (phi.size() != m.f.size())
        fail(ErrorCode::InvalidArgument, "Phi not on the metric grid");
    for (double v : phi)
        if (!(v > 0.0))
            fail(ErrorCode::InvalidArgument, "Phi must be positive");

    const CurvatureField cf = scalar_curvature(m);
    const std::vector<double> w = volume_weights(m);
    const WParts p = w_parts(m, cf.R, w, phi, tau);
    const double mass = p.mass / (fourPi * tau);
    if (std::abs(mass - 1.0) > 1e-8)
        fail(ErrorCode::ConstraintViolation,
             "Phi off the constraint sphere: (4 pi tau)^-1 int Phi^2 = " +
                 std::to_string(mass));
    return w_value(p, tau);
}

MuResult mu(const RadialMetric& m, double tau, const EntropyOptions& opts) {
    validate_metric(m);
    opts.validate();
    if (!(tau > 0.0)) fail(ErrorCode::InvalidArgument, "tau must be positive");

    Objective obj{m, scalar_curvature(m).R, volume_weights(m), tau};
    const size_t n = m.f.size();
    const double L = m.radius();
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    MuResult best;
    best.mu = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::vector<double> phi(n, 1.0);
        if (restart > 0) {
            // Smooth log-perturbation with Neumann ends: cosine modes have
            // zero slope at both the pole and the boundary.
            double a[4];
            for (double& v : a) v = 0.3 * gauss(rng);
            for (size_t i = 0; i < n; ++i) {
                const double x = std::numbers::pi * (m.h * i) / L;
                double bump = 0.0;
                for (int j = 0; j < 4; ++j)
                    bump += a[j] / (j + 1) * std::cos((j + 1) * x);
                phi[i] = std::exp(bump);
            }
        }
        obj.renormalize(phi);

        double fx = obj.value(phi);
        double alpha = 1e-2;
        bool converged = false;
        for (int iter = 0; iter < opts.maxIters; ++iter) {
            const std::vector<double> g = obj.gradient(phi);
            double gmax = 0.0;
            for (double v : g) gmax = std::max(gmax, std::abs(v));
            if (gmax < opts.gradTol) {
                converged = true;
                break;
            }
            bool improved = false;
            while (alpha > opts.stepTol) {
                std::vector<double> trial(n);
                for (size_t i = 0; i < n; ++i)
                    trial[i] = phi[i] - alpha * g[i];
                obj.renormalize(trial);
                const double ft = obj.value(trial);
                if (ft < fx) {
                    phi.swap(trial);
                    fx = ft;
                    alpha *= 2.0;
                    improved = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!improved) {
                converged = true;  // line search exhausted: local minimum
                break;
            }
        }
        if (fx < best.mu) {
            best.mu = fx;
            best.minimizer = phi;
            best.converged = converged;
        }
    }
    return best;
}

ProbeResult cigar_entropy_probe(double r, double cutoff) {
    if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "probe scale r <= 0");
    if (cutoff < 8.0 * r)
        fail(ErrorCode::InvalidArgument, "probe cutoff below 8r");

    const double eps = 1e-3 / r;
    // Tail mass beyond the truncation relative to the plateau mass ~ 2*pi*r.
    const double tailRel = eps * std::exp(-(cutoff - 4.0 * r)) / r;
    if (tailRel > 1e-6)
        fail(ErrorCode::TailMass,
             "truncated-cigar tail mass too large for the normalization");

    const int N = std::max(4096, static_cast<int>(std::ceil(cutoff / 0.02)));
    const RadialMetric m = exact::cigar_metric(cutoff, N);

    // Test function: eps/r inside B(0,r), 1 on A(2r,3r), eps*exp(-rho)
    // outside B(0,4r), sqrt(phi)-linear across the transition annuli (keeps
    // |grad phi|^2/phi = 4 |grad sqrt(phi)|^2 <= 4/r^2).
    const double sIn = std::sqrt(eps / r);
    std::vector<double> sqrtPhi(m.f.size());
    for (size_t i = 0; i < sqrtPhi.size(); ++i) {
        const double rho = m.h * i;
        if (rho <= r)
            sqrtPhi[i] = sIn;
        else if (rho <= 2.0 * r)
            sqrtPhi[i] = sIn + (rho - r) / r * (1.0 - sIn);
        else if (rho <= 3.0 * r)
            sqrtPhi[i] = 1.0;
        else if (rho <= 4.0 * r) {
            const double sOut = std::sqrt(eps) * std::exp(-2.0 * r);
            sqrtPhi[i] = 1.0 + (rho - 3.0 * r) / r * (sOut - 1.0);
        } else {
            sqrtPhi[i] = std::sqrt(eps) * std::exp(-rho / 2.0);
        }
    }

    const std::vector<double> w = volume_weights(m);
    double phiMass = 0.0;
    for (size_t i = 0; i < w.size(); ++i)
        phiMass += w[i] * sqrtPhi[i] * sqrtPhi[i];

    const double tau = r * r;
    ProbeResult out;
    out.c = std::log(phiMass / (fourPi * tau));

    const double scale = std::exp(-out.c / 2.0);
    std::vector<double> Phi(sqrtPhi.size());
    for (size_t i = 0; i < Phi.size(); ++i)
        Phi[i] = std::max(1e-150, sqrtPhi[i] * scale);
    out.W = w_functional(m, Phi, tau);
    return out;
}

} // namespace ricci::entropy
