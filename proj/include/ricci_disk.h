/* C interface to the rotationally symmetric boundary-value Ricci flow
 * laboratory. All functions return rd_status (or a handle that is NULL on
 * failure); rd_last_error() describes the most recent failure on the
 * calling thread. */
#ifndef RICCI_DISK_H
#define RICCI_DISK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
    RD_OK = 0,
    RD_INVALID_ARGUMENT = 1,
    RD_MALFORMED_PROFILE = 2,
    RD_POSITIVITY_LOST = 3,
    RD_STEP_UNDERFLOW = 4,
    RD_NO_ROOT = 5,
    RD_CONSTRAINT_VIOLATION = 6,
    RD_TAIL_MASS = 7,
    RD_DOMAIN_ERROR = 8,
    RD_MALFORMED_TRAJECTORY = 9,
    RD_IO_ERROR = 10,
    RD_INTERNAL = 11
} rd_status;

typedef struct rd_metric rd_metric;
typedef struct rd_trajectory rd_trajectory;

/* Message for the last failing call on this thread; never NULL. */
const char* rd_last_error(void);

/* --- metric construction ------------------------------------------------ */

/* f sampled on the uniform grid rho_i = i*h, i = 0..n-1. */
rd_metric* rd_metric_create(double h, const double* f, size_t n);
rd_metric* rd_metric_hemisphere(int n_intervals);
rd_metric* rd_metric_cap(double K, double rho_max, int n_intervals);
rd_metric* rd_metric_flat_disk(double rho0, int n_intervals);
rd_metric* rd_metric_cigar(double L, int n_intervals);
/* Interpolated sphere/cone family profile at epsilon; *r0_out (optional)
 * receives the certified boundary radius. */
rd_metric* rd_metric_family(double epsilon, int n_intervals, double* r0_out);
rd_metric* rd_metric_scale(const rd_metric* m, double lambda);
void rd_metric_destroy(rd_metric* m);

/* --- geometry ------------------------------------------------------------ */

size_t rd_metric_size(const rd_metric* m);
double rd_metric_h(const rd_metric* m);
rd_status rd_metric_profile(const rd_metric* m, double* f_out, size_t n);
rd_status rd_scalar_curvature(const rd_metric* m, double* r_out, size_t n);
rd_status rd_boundary_geodesic_curvature(const rd_metric* m, double* k_out);
rd_status rd_area_boundary_length(const rd_metric* m, double* area_out,
                                  double* boundary_length_out);
rd_status rd_isoperimetric_infimum(const rd_metric* m, double* value_out,
                                   double* argmin_rho_out);
rd_status rd_fermi_riccati_residual(const rd_metric* m, double* res_out);

/* --- flow ----------------------------------------------------------------- */

typedef struct rd_flow_config {
    double cfl_safety;  /* dt = cfl_safety * h^2 * min(u) / 2 */
    double t_max;
    double r_blowup;    /* curvature threshold for blow-up detection */
    double dt_min;
    int output_every;   /* snapshot cadence in accepted steps */
} rd_flow_config;

void rd_flow_config_default(rd_flow_config* cfg);

/* Explicit conformal flow u_t = Lap0 log u - R0 with the prescribed-
 * geodesic-curvature boundary condition; u starts at 1. */
rd_trajectory* rd_flow_run(const rd_metric* base, const rd_flow_config* cfg);
void rd_trajectory_destroy(rd_trajectory* t);

/* Termination as an rd_status: RD_OK for ReachedTMax or BlowupDetected. */
rd_status rd_trajectory_termination(const rd_trajectory* t);
size_t rd_trajectory_snapshot_count(const rd_trajectory* t);
rd_status rd_trajectory_snapshot(const rd_trajectory* t, size_t index,
                                 double* time_out, double* u_out, size_t n);
/* NaN unless the run terminated by blow-up detection. */
double rd_trajectory_blowup_time(const rd_trajectory* t);
/* Persist the trajectory directory (manifest, snapshots, diagnostics). */
rd_status rd_trajectory_write(const rd_trajectory* t, const char* out_dir);

/* --- entropy -------------------------------------------------------------- */

/* Upper bound on mu(g, tau) via projected gradient descent; seed fixes the
 * randomized restarts. */
rd_status rd_mu(const rd_metric* m, double tau, uint64_t seed, double* mu_out);
/* Plateau test-function entropy probe on the cigar truncated at
 * cutoff_mult * r; writes W(r) and the normalization constant c(r). */
rd_status rd_cigar_probe(double r, double cutoff_mult, double* w_out,
                         double* c_out);

/* --- command entry points (process exit codes) ---------------------------- */

int rd_cmd_run(const char* config_path, const char* resume_path_or_null);
int rd_cmd_family(double epsilon, int grid_n, const char* out_path_or_null);
int rd_cmd_probe(const double* r_list, size_t n_r, double cutoff_mult,
                 const char* out_path_or_null);

#ifdef __cplusplus
}
#endif

#endif /* RICCI_DISK_H */
