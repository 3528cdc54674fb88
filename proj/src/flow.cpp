#include "ricci/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ricci/diagnostics.hpp"

namespace ricci {

void SolverConfig::validate() const {
    if (N < 16) fail(ErrorCode::InvalidArgument, "solver N < 16");
    if (!(cflSafety > 0.0) || cflSafety > 1.0)
        fail(ErrorCode::InvalidArgument, "cflSafety outside (0, 1]");
    if (!(tMax > 0.0)) fail(ErrorCode::InvalidArgument, "tMax <= 0");
    if (!(rBlowup > 0.0)) fail(ErrorCode::InvalidArgument, "rBlowup <= 0");
    if (!(dtMin > 0.0)) fail(ErrorCode::InvalidArgument, "dtMin <= 0");
    if (outputEvery < 1) fail(ErrorCode::InvalidArgument, "outputEvery < 1");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::ReachedTMax: return "ReachedTMax";
        case Termination::BlowupDetected: return "BlowupDetected";
        case Termination::StepUnderflow: return "StepUnderflow";
        case Termination::PositivityLost: return "PositivityLost";
    }
    return "?";
}

ConformalState initialize(const RadialMetric& base) {
    validate_metric(base);
    ConformalState s;
    s.base = base;
    s.R0 = scalar_curvature(base);
    s.u.assign(base.f.size(), 1.0);
    s.t = 0.0;
    s.k0 = boundary_geodesic_curvature(base);

    const int N = base.intervals();
    s.drift.assign(N + 1, 0.0);
    for (int i = 1; i < N; ++i)
        s.drift[i] = (base.f[i + 1] - base.f[i - 1]) / (2.0 * base.h * base.f[i]);
    s.drift[N] = s.k0;
    s.curvatureTimeIntegral.assign(N + 1, 0.0);
    return s;
}

std::vector<double> laplacian_log_u(const ConformalState& s) {
    const int N = s.base.intervals();
    const double h = s.base.h;
    std::vector<double> phi(N + 1);
    for (int i = 0; i <= N; ++i) {
        if (!(s.u[i] > 0.0))
            fail(ErrorCode::PositivityLost,
                 "u <= 0 at grid index " + std::to_string(i));
        phi[i] = std::log(s.u[i]);
    }

    // Ghost node from the nonlinear flux u_r(L) = 2 u k0 (sqrt(u) - 1); the
    // relation is evaluated at the boundary node, so the centered one-sided
    // derivative fixes the ghost directly.
    const double uN = s.u[N];
    const double ur = 2.0 * uN * s.k0 * (std::sqrt(uN) - 1.0);
    const double uGhost = s.u[N - 1] + 2.0 * h * ur;
    if (!(uGhost > 0.0))
        fail(ErrorCode::PositivityLost, "boundary ghost went nonpositive");
    const double phiGhost = std::log(uGhost);

    std::vector<double> lap(N + 1);
    lap[0] = 4.0 * (phi[1] - phi[0]) / (h * h);  // even extension: 2 phi''(0)
    for (int i = 1; i < N; ++i) {
        lap[i] = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h) +
                 s.drift[i] * (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    }
    lap[N] = (phiGhost - 2.0 * phi[N] + phi[N - 1]) / (h * h) +
             s.drift[N] * (phiGhost - phi[N - 1]) / (2.0 * h);
    return lap;
}

CurvatureField curvature_of_state(const ConformalState& s) {
    const std::vector<double> lap = laplacian_log_u(s);
    CurvatureField out;
    out.R.resize(lap.size());
    for (size_t i = 0; i < lap.size(); ++i)
        out.R[i] = (s.R0.R[i] - lap[i]) / s.u[i];
    return out;
}

namespace {

double stable_dt(const ConformalState& s, const SolverConfig& cfg) {
    const double uMin = *std::min_element(s.u.begin(), s.u.end());
    return cfg.cflSafety * s.base.h * s.base.h * uMin / 2.0;
}

// Advances in place; lap is the Laplacian at the current state. Returns
// termination on failure, nullopt on an accepted step.
std::optional<Termination> advance(ConformalState& s,
                                   const std::vector<double>& lap,
                                   double dt) {
    const size_t n = s.u.size();
    for (size_t i = 0; i < n; ++i) {
        const double R = (s.R0.R[i] - lap[i]) / s.u[i];
        s.curvatureTimeIntegral[i] += dt * R;
        s.u[i] += dt * (lap[i] - s.R0.R[i]);
        if (!(s.u[i] > 0.0)) return Termination::PositivityLost;
    }
    s.t += dt;
    return std::nullopt;
}

// Blow-up time from a least-squares line through 1/R_max over the last
// decade of R_max growth: y = a + b t vanishes at T = -a/b.
double fit_blowup_time(const std::vector<std::pair<double, double>>& samples,
                       double fallback) {
    if (samples.size() < 4) return fallback;
    const double rFinal = samples.back().second;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [t, rmax] : samples) {
        if (rmax < 0.1 * rFinal) continue;
        const double y = 1.0 / rmax;
        sx += t; sy += y; sxx += t * t; sxy += t * y;
        ++n;
    }
    if (n < 3) return fallback;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return fallback;
    const double b = (n * sxy - sx * sy) / denom;
    const double a = (sy - b * sx) / n;
    if (!(b < 0.0)) return fallback;
    const double T = -a / b;
    return std::isfinite(T) && T > 0.0 ? T : fallback;
}

} // namespace

ConformalState step(const ConformalState& s, const SolverConfig& cfg) {
    cfg.validate();
    const double dt = stable_dt(s, cfg);
    if (dt < cfg.dtMin)
        fail(ErrorCode::StepUnderflow, "step size fell below dtMin");
    ConformalState next = s;
    const std::vector<double> lap = laplacian_log_u(s);
    if (auto term = advance(next, lap, dt))
        fail(ErrorCode::PositivityLost, "u <= 0 after explicit update");
    return next;
}

Trajectory run(const RadialMetric& base, const SolverConfig& cfg,
               const std::optional<Snapshot>& resume) {
    cfg.validate();
    ConformalState s = initialize(base);
    if (resume) {
        if (resume->u.size() != s.u.size())
            fail(ErrorCode::InvalidArgument,
                 "resume snapshot does not match the base grid");
        s.u = resume->u;
        s.t = resume->t;
    }

    Trajectory traj;
    traj.base = base;
    traj.config = cfg;
    traj.k0 = s.k0;

    std::vector<double> lap = laplacian_log_u(s);
    auto rmax_of = [&](const std::vector<double>& lapNow) {
        double r = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < s.u.size(); ++i)
            r = std::max(r, (s.R0.R[i] - lapNow[i]) / s.u[i]);
        return r;
    };

    double supRmax = rmax_of(lap);
    std::vector<std::pair<double, double>> fitSamples;
    std::uint64_t sampleStride = 1;

    auto record_now = [&] {
        traj.snapshots.push_back({s.t, s.u});
        DiagnosticsRecord rec = diagnostics::make_record(s, supRmax);
        traj.shiRatioSup = std::max(
            traj.shiRatioSup, std::isnan(rec.shiRatio) ? 0.0 : rec.shiRatio);
        traj.records.push_back(std::move(rec));
    };

    record_now();

    while (true) {
        double dt = stable_dt(s, cfg);
        bool finalClamp = false;
        if (s.t + dt >= cfg.tMax) {
            dt = cfg.tMax - s.t;
            finalClamp = true;
            if (dt <= 0.0) {
                traj.termination = Termination::ReachedTMax;
                break;
            }
        }
        if (!finalClamp && dt < cfg.dtMin) {
            traj.termination = Termination::StepUnderflow;
            record_now();
            break;
        }

        if (auto term = advance(s, lap, dt)) {
            traj.termination = *term;
            break;  // state is tainted; no final record
        }
        ++traj.stepsAccepted;
        lap = laplacian_log_u(s);
        const double rmax = rmax_of(lap);
        supRmax = std::max(supRmax, rmax);

        if (traj.stepsAccepted % sampleStride == 0) {
            fitSamples.emplace_back(s.t, rmax);
            if (fitSamples.size() > 100000) {  // keep the fit buffer bounded
                std::vector<std::pair<double, double>> half;
                half.reserve(fitSamples.size() / 2);
                for (size_t i = 0; i < fitSamples.size(); i += 2)
                    half.push_back(fitSamples[i]);
                fitSamples.swap(half);
                sampleStride *= 2;
            }
        }

        if (rmax >= cfg.rBlowup) {
            traj.termination = Termination::BlowupDetected;
            record_now();
            traj.blowupTimeEstimate = fit_blowup_time(fitSamples, s.t);
            break;
        }
        if (finalClamp || s.t >= cfg.tMax) {
            traj.termination = Termination::ReachedTMax;
            record_now();
            break;
        }
        if (traj.stepsAccepted % static_cast<std::uint64_t>(cfg.outputEvery) == 0)
            record_now();
    }

    diagnostics::fill_area_rate_residuals(traj.records, traj.k0);
    return traj;
}

NormalizedTrajectory normalize(const Trajectory& traj) {
    if (traj.snapshots.size() < 2)
        fail(ErrorCode::MalformedTrajectory,
             "normalization needs at least 2 snapshots");

    const auto& f0 = traj.base.f;
    const double h = traj.base.h;
    auto conformal_area = [&](const std::vector<double>& u) {
        std::vector<double> integrand(u.size());
        for (size_t i = 0; i < u.size(); ++i) integrand[i] = u[i] * f0[i];
        return 2.0 * std::numbers::pi * detail::trapz(integrand, h);
    };

    NormalizedTrajectory out;
    out.snapshots.resize(traj.snapshots.size());
    double prevT = -std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < traj.snapshots.size(); ++j) {
        const Snapshot& snap = traj.snapshots[j];
        if (snap.t <= prevT)
            fail(ErrorCode::MalformedTrajectory, "snapshot times not increasing");
        prevT = snap.t;
        NormalizedSnapshot& ns = out.snapshots[j];
        ns.area = conformal_area(snap.u);
        if (!(ns.area > 0.0))
            fail(ErrorCode::MalformedTrajectory, "nonpositive snapshot area");
        ns.kTilde = traj.k0 * std::sqrt(ns.area);
        ns.u.resize(snap.u.size());
        for (size_t i = 0; i < snap.u.size(); ++i)
            ns.u[i] = snap.u[i] / ns.area;
    }
    out.snapshots[0].tTilde = 0.0;
    for (size_t j = 1; j < out.snapshots.size(); ++j) {
        const double dtj = traj.snapshots[j].t - traj.snapshots[j - 1].t;
        out.snapshots[j].tTilde =
            out.snapshots[j - 1].tTilde +
            0.5 * dtj *
                (1.0 / out.snapshots[j].area + 1.0 / out.snapshots[j - 1].area);
    }
    return out;
}

} // namespace ricci
