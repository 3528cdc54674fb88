#include "ricci_disk.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "ricci/entropy.hpp"
#include "ricci/exact.hpp"
#include "ricci/family.hpp"
#include "ricci/flow.hpp"
#include "ricci/geometry.hpp"
#include "ricci/io.hpp"

struct rd_metric {
    ricci::RadialMetric m;
};

struct rd_trajectory {
    ricci::Trajectory traj;
};

namespace {

thread_local std::string g_last_error = "";

rd_status code_of(const ricci::Error& e) {
    using ricci::ErrorCode;
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return RD_INVALID_ARGUMENT;
        case ErrorCode::MalformedProfile: return RD_MALFORMED_PROFILE;
        case ErrorCode::PositivityLost: return RD_POSITIVITY_LOST;
        case ErrorCode::StepUnderflow: return RD_STEP_UNDERFLOW;
        case ErrorCode::NoRoot: return RD_NO_ROOT;
        case ErrorCode::ConstraintViolation: return RD_CONSTRAINT_VIOLATION;
        case ErrorCode::TailMass: return RD_TAIL_MASS;
        case ErrorCode::DomainError: return RD_DOMAIN_ERROR;
        case ErrorCode::MalformedTrajectory: return RD_MALFORMED_TRAJECTORY;
        case ErrorCode::Io: return RD_IO_ERROR;
    }
    return RD_INTERNAL;
}

template <typename Fn>
rd_status guarded(Fn&& fn) {
    try {
        fn();
        return RD_OK;
    } catch (const ricci::Error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RD_INTERNAL;
    }
}

template <typename Fn>
rd_metric* guarded_metric(Fn&& fn) {
    rd_metric* out = nullptr;
    if (guarded([&] { out = new rd_metric{fn()}; }) != RD_OK) return nullptr;
    return out;
}

rd_status require(bool ok, const char* msg) {
    if (ok) return RD_OK;
    g_last_error = msg;
    return RD_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* rd_last_error(void) { return g_last_error.c_str(); }

rd_metric* rd_metric_create(double h, const double* f, size_t n) {
    if (!f) {
        g_last_error = "null profile";
        return nullptr;
    }
    return guarded_metric([&] {
        ricci::RadialMetric m;
        m.h = h;
        m.f.assign(f, f + n);
        ricci::validate_metric(m);
        return m;
    });
}

rd_metric* rd_metric_hemisphere(int n_intervals) {
    return guarded_metric([&] { return ricci::exact::hemisphere_metric(n_intervals); });
}

rd_metric* rd_metric_cap(double K, double rho_max, int n_intervals) {
    return guarded_metric(
        [&] { return ricci::exact::spherical_cap_metric(K, rho_max, n_intervals); });
}

rd_metric* rd_metric_flat_disk(double rho0, int n_intervals) {
    return guarded_metric([&] { return ricci::exact::flat_disk_metric(rho0, n_intervals); });
}

rd_metric* rd_metric_cigar(double L, int n_intervals) {
    return guarded_metric([&] { return ricci::exact::cigar_metric(L, n_intervals); });
}

rd_metric* rd_metric_family(double epsilon, int n_intervals, double* r0_out) {
    return guarded_metric([&] {
        ricci::family::FamilyParams p;
        p.epsilon = epsilon;
        if (r0_out) *r0_out = ricci::family::family_boundary_radius(p).r0;
        return ricci::family::family_metric(p, n_intervals);
    });
}

rd_metric* rd_metric_scale(const rd_metric* m, double lambda) {
    if (!m) {
        g_last_error = "null metric";
        return nullptr;
    }
    return guarded_metric([&] { return ricci::metric_scale(m->m, lambda); });
}

void rd_metric_destroy(rd_metric* m) { delete m; }

size_t rd_metric_size(const rd_metric* m) { return m ? m->m.f.size() : 0; }

double rd_metric_h(const rd_metric* m) {
    return m ? m->m.h : std::nan("");
}

rd_status rd_metric_profile(const rd_metric* m, double* f_out, size_t n) {
    if (rd_status s = require(m && f_out, "null argument")) return s;
    if (rd_status s = require(n == m->m.f.size(), "size mismatch")) return s;
    std::memcpy(f_out, m->m.f.data(), n * sizeof(double));
    return RD_OK;
}

rd_status rd_scalar_curvature(const rd_metric* m, double* r_out, size_t n) {
    if (rd_status s = require(m && r_out, "null argument")) return s;
    if (rd_status s = require(n == m->m.f.size(), "size mismatch")) return s;
    return guarded([&] {
        const ricci::CurvatureField R = ricci::scalar_curvature(m->m);
        std::memcpy(r_out, R.R.data(), n * sizeof(double));
    });
}

rd_status rd_boundary_geodesic_curvature(const rd_metric* m, double* k_out) {
    if (rd_status s = require(m && k_out, "null argument")) return s;
    return guarded([&] { *k_out = ricci::boundary_geodesic_curvature(m->m); });
}

rd_status rd_area_boundary_length(const rd_metric* m, double* area_out,
                                  double* boundary_length_out) {
    if (rd_status s = require(m && area_out && boundary_length_out,
                              "null argument"))
        return s;
    return guarded([&] {
        const ricci::AreaProfile a = ricci::area_and_lengths(m->m);
        *area_out = a.area;
        *boundary_length_out = a.boundaryLength;
    });
}

rd_status rd_isoperimetric_infimum(const rd_metric* m, double* value_out,
                                   double* argmin_rho_out) {
    if (rd_status s = require(m && value_out, "null argument")) return s;
    return guarded([&] {
        const ricci::IsoperimetricInfimum iso = ricci::isoperimetric_infimum(m->m);
        *value_out = iso.value;
        if (argmin_rho_out) *argmin_rho_out = iso.argminRho;
    });
}

rd_status rd_fermi_riccati_residual(const rd_metric* m, double* res_out) {
    if (rd_status s = require(m && res_out, "null argument")) return s;
    return guarded([&] { *res_out = ricci::fermi_riccati_residual(m->m); });
}

void rd_flow_config_default(rd_flow_config* cfg) {
    if (!cfg) return;
    const ricci::SolverConfig d;
    cfg->cfl_safety = d.cflSafety;
    cfg->t_max = d.tMax;
    cfg->r_blowup = d.rBlowup;
    cfg->dt_min = d.dtMin;
    cfg->output_every = d.outputEvery;
}

rd_trajectory* rd_flow_run(const rd_metric* base, const rd_flow_config* cfg) {
    if (!base || !cfg) {
        g_last_error = "null argument";
        return nullptr;
    }
    rd_trajectory* out = nullptr;
    const rd_status s = guarded([&] {
        ricci::SolverConfig c;
        c.N = static_cast<int>(base->m.intervals());
        c.cflSafety = cfg->cfl_safety;
        c.tMax = cfg->t_max;
        c.rBlowup = cfg->r_blowup;
        c.dtMin = cfg->dt_min;
        c.outputEvery = cfg->output_every;
        c.validate();
        out = new rd_trajectory{ricci::run(base->m, c)};
    });
    return s == RD_OK ? out : nullptr;
}

void rd_trajectory_destroy(rd_trajectory* t) { delete t; }

rd_status rd_trajectory_termination(const rd_trajectory* t) {
    if (!t) return RD_INVALID_ARGUMENT;
    switch (t->traj.termination) {
        case ricci::Termination::ReachedTMax:
        case ricci::Termination::BlowupDetected: return RD_OK;
        case ricci::Termination::StepUnderflow: return RD_STEP_UNDERFLOW;
        case ricci::Termination::PositivityLost: return RD_POSITIVITY_LOST;
    }
    return RD_INTERNAL;
}

size_t rd_trajectory_snapshot_count(const rd_trajectory* t) {
    return t ? t->traj.snapshots.size() : 0;
}

rd_status rd_trajectory_snapshot(const rd_trajectory* t, size_t index,
                                 double* time_out, double* u_out, size_t n) {
    if (rd_status s = require(t != nullptr, "null trajectory")) return s;
    if (rd_status s =
            require(index < t->traj.snapshots.size(), "index out of range"))
        return s;
    const ricci::Snapshot& snap = t->traj.snapshots[index];
    if (time_out) *time_out = snap.t;
    if (u_out) {
        if (rd_status s = require(n == snap.u.size(), "size mismatch")) return s;
        std::memcpy(u_out, snap.u.data(), n * sizeof(double));
    }
    return RD_OK;
}

double rd_trajectory_blowup_time(const rd_trajectory* t) {
    return t ? t->traj.blowupTimeEstimate : std::nan("");
}

rd_status rd_trajectory_write(const rd_trajectory* t, const char* out_dir) {
    if (rd_status s = require(t && out_dir && *out_dir, "null argument"))
        return s;
    return guarded([&] {
        namespace fs = std::filesystem;
        const std::string dir = out_dir;
        fs::create_directories(dir);
        fs::create_directories(dir + "/snapshots");
        ricci::io::write_metric(dir + "/base.json", t->traj.base);
        for (size_t j = 0; j < t->traj.snapshots.size(); ++j) {
            char name[32];
            std::snprintf(name, sizeof(name), "%04zu.json", j);
            ricci::io::write_snapshot(dir + "/snapshots/" + name,
                                      t->traj.snapshots[j], "../base.json");
        }
        ricci::io::write_diagnostics_csv(dir + "/diagnostics.csv",
                                         t->traj.records);
        std::ofstream mf(dir + "/manifest.json");
        if (!mf) ricci::fail(ricci::ErrorCode::Io, "cannot write manifest");
        mf << "{\n  \"termination\": \"" << ricci::to_string(t->traj.termination)
           << "\",\n  \"k0\": " << t->traj.k0
           << ",\n  \"stepsAccepted\": " << t->traj.stepsAccepted
           << ",\n  \"shiRatioSup\": " << t->traj.shiRatioSup
           << ",\n  \"snapshotCount\": " << t->traj.snapshots.size() << "\n}\n";
    });
}

rd_status rd_mu(const rd_metric* m, double tau, uint64_t seed, double* mu_out) {
    if (rd_status s = require(m && mu_out, "null argument")) return s;
    return guarded([&] {
        ricci::entropy::EntropyOptions opts;
        opts.seed = seed;
        *mu_out = ricci::entropy::mu(m->m, tau, opts).mu;
    });
}

rd_status rd_cigar_probe(double r, double cutoff_mult, double* w_out,
                         double* c_out) {
    if (rd_status s = require(w_out != nullptr, "null argument")) return s;
    return guarded([&] {
        const ricci::entropy::ProbeResult res =
            ricci::entropy::cigar_entropy_probe(r, cutoff_mult * r);
        *w_out = res.W;
        if (c_out) *c_out = res.c;
    });
}

int rd_cmd_run(const char* config_path, const char* resume_path_or_null) {
    if (!config_path) return 1;
    std::optional<std::string> resume;
    if (resume_path_or_null) resume = resume_path_or_null;
    try {
        return ricci::io::cmd_run(config_path, resume);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 2;
    }
}

int rd_cmd_family(double epsilon, int grid_n, const char* out_path_or_null) {
    std::optional<std::string> out;
    if (out_path_or_null) out = out_path_or_null;
    try {
        return ricci::io::cmd_family(epsilon, grid_n, out);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 1;
    }
}

int rd_cmd_probe(const double* r_list, size_t n_r, double cutoff_mult,
                 const char* out_path_or_null) {
    if (!r_list && n_r > 0) return 1;
    std::optional<std::string> out;
    if (out_path_or_null) out = out_path_or_null;
    try {
        return ricci::io::cmd_probe(std::vector<double>(r_list, r_list + n_r),
                                    cutoff_mult, out);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 1;
    }
}

} // extern "C"
