#pragma once

#include <cstdint>
#include <vector>

#include "ricci/geometry.hpp"

namespace ricci::entropy {

struct EntropyOptions {
    int maxIters = 500;
    double stepTol = 1e-12;   ///< line-search floor on the step length
    double gradTol = 1e-8;    ///< max-norm of the projected gradient
    int restarts = 4;         ///< randomized initializations, >= 1
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;

    void validate() const;
};

/// F(g, f) = int (R + |grad f|^2) e^{-f} dV by trapezoid quadrature against
/// the area element 2*pi*F drho.
double f_functional(const RadialMetric& m, const std::vector<double>& f);

/// W(g, Phi, tau) = (4*pi*tau)^{-1} int [4 tau |grad Phi|^2
/// + (tau R - 2 log Phi - 2) Phi^2] dV. The caller must put Phi on the
/// constraint sphere (4*pi*tau)^{-1} int Phi^2 dV = 1 (checked to 1e-8).
double w_functional(const RadialMetric& m, const std::vector<double>& phi,
                    double tau);

struct MuResult {
    double mu = 0.0;
    std::vector<double> minimizer;
    bool converged = false;
};

/// Upper bound on mu(g, tau) = inf W by projected gradient descent over
/// positive Phi, best over opts.restarts initializations.
MuResult mu(const RadialMetric& m, double tau, const EntropyOptions& opts);

struct ProbeResult {
    double W = 0.0;
    double c = 0.0;  ///< normalization constant of f = -log(phi) + c
};

/// The cigar entropy probe at scale r: the plateau/annulus test function
/// evaluated on a cigar truncated at `cutoff` (>= 8r), with tau = r^2.
ProbeResult cigar_entropy_probe(double r, double cutoff);

} // namespace ricci::entropy
