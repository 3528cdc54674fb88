#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ricci/diagnostics_record.hpp"
#include "ricci/geometry.hpp"

namespace ricci {

/// The evolving unknown of the boundary-value flow: g(t) = u(.,t) * g0.
struct ConformalState {
    RadialMetric base;        ///< g0, fixed
    CurvatureField R0;        ///< curvature of g0, cached
    std::vector<double> u;    ///< conformal factor, positive
    double t = 0.0;           ///< unnormalized flow time
    double k0 = 0.0;          ///< prescribed boundary geodesic curvature
    std::vector<double> drift;  ///< f0'/f0 on the grid (pole entry unused)
    /// Accumulated int_0^t R(x,tau) dtau per node; along the flow
    /// log u = -integral up to time-quadrature error.
    std::vector<double> curvatureTimeIntegral;
};

struct SolverConfig {
    int N = 256;               ///< grid intervals (used when sampling bases)
    double cflSafety = 0.2;    ///< dt = cflSafety * h^2 * min(u) / 2
    double tMax = 1.0;
    double rBlowup = 1e6;      ///< curvature threshold for blow-up detection
    double dtMin = 1e-14;
    int outputEvery = 100;     ///< snapshot/record cadence in accepted steps

    void validate() const;
};

enum class Termination {
    ReachedTMax,
    BlowupDetected,
    StepUnderflow,
    PositivityLost,
};

const char* to_string(Termination t);

struct Snapshot {
    double t = 0.0;
    std::vector<double> u;
};

struct Trajectory {
    RadialMetric base;
    SolverConfig config;
    double k0 = 0.0;
    std::vector<Snapshot> snapshots;
    std::vector<DiagnosticsRecord> records;
    Termination termination = Termination::ReachedTMax;
    /// Extrapolated blow-up time from the R_max ~ C/(T-t) fit over the last
    /// decade of growth; NaN unless termination is BlowupDetected.
    double blowupTimeEstimate = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t stepsAccepted = 0;
    double shiRatioSup = 0.0;  ///< largest shi ratio seen over the run
};

/// u = 1, t = 0, k0 and R0 cached from the base metric.
ConformalState initialize(const RadialMetric& base);

/// Delta_0 log u with the even pole row and the nonlinear boundary ghost
/// u_r(L) = 2 u k0 (sqrt(u) - 1).
std::vector<double> laplacian_log_u(const ConformalState& s);

/// One explicit Euler update of u_t = Delta_0 log u - R0. Throws
/// PositivityLost / StepUnderflow.
ConformalState step(const ConformalState& s, const SolverConfig& cfg);

/// R = (R0 - Delta_0 log u)/u.
CurvatureField curvature_of_state(const ConformalState& s);

/// Evolve until tMax, blow-up threshold, or failure; snapshots and
/// diagnostics every outputEvery accepted steps and at termination.
/// `resume` continues from a stored snapshot instead of u = 1.
Trajectory run(const RadialMetric& base, const SolverConfig& cfg,
               const std::optional<Snapshot>& resume = std::nullopt);

struct NormalizedSnapshot {
    double tTilde = 0.0;    ///< int_0^t 1/A
    double kTilde = 0.0;    ///< k0 * sqrt(A(t))
    double area = 0.0;      ///< unnormalized area at this time
    std::vector<double> u;  ///< conformal factor of the unit-area metric
};

struct NormalizedTrajectory {
    std::vector<NormalizedSnapshot> snapshots;
};

/// Unit-area rescaling with the reparameterized time t~ = int 1/A; a pure
/// post-pass over the unnormalized trajectory.
NormalizedTrajectory normalize(const Trajectory& traj);

} // namespace ricci
