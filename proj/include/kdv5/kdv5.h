#ifndef KDV5_H
#define KDV5_H

/* C API of the fifth-order KdV numerical laboratory.
 *
 * The library evolves u_t + u_xxxxx + u u_x = 0 on a periodic box with an
 * exact-phase exponential integrator, provides the free propagator W(t),
 * Sobolev and space-time (modulation-weighted) norms, kink diagnostics for
 * the dispersive blow-up experiments, and quadrature evaluation of the
 * bilinear kernel bound.
 *
 * Conventions: every object is an opaque handle created/destroyed here;
 * functions return kdv5_status, with outputs through pointers. On any
 * failure kdv5_last_error() describes the most recent error of the calling
 * thread. Handles are immutable after creation and safe to share across
 * threads. The environment variable DBU_THREADS bounds internal parallelism.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kdv5_status {
    KDV5_OK = 0,
    KDV5_ERR_INVALID_ARGUMENT = 1,
    KDV5_ERR_CONFIG = 2,
    KDV5_ERR_PARAMETER = 3,
    KDV5_ERR_OVERFLOW_GUARD = 4,
    KDV5_ERR_BAND_TOO_HIGH = 5,
    KDV5_ERR_INSTABILITY = 6,
    KDV5_ERR_NO_CONTRACTION = 7,
    KDV5_ERR_QUADRATURE = 8,
    KDV5_ERR_DEGENERATE_BAND = 9, /* reserved; tail fits report a flag instead */
    KDV5_ERR_IO = 10,
    KDV5_ERR_INTERNAL = 99
} kdv5_status;

typedef struct kdv5_grid kdv5_grid;
typedef struct kdv5_field kdv5_field;
typedef struct kdv5_trajectory kdv5_trajectory;

const char* kdv5_version(void);

/* Last error message of the calling thread (empty string when none). */
const char* kdv5_last_error(void);

/* ------------------------------------------------------------------ grids */

/* n_points: power of two >= 8; box_length > 0. */
kdv5_status kdv5_grid_create(int n_points, double box_length, kdv5_grid** out);
void kdv5_grid_destroy(kdv5_grid* grid);
int kdv5_grid_size(const kdv5_grid* grid);
double kdv5_grid_box_length(const kdv5_grid* grid);

/* ----------------------------------------------------------------- fields */

/* Real field from n_points samples on x_m = -L/2 + m L / n. */
kdv5_status kdv5_field_create(const kdv5_grid* grid, const double* samples,
                              kdv5_field** out);
/* The periodized kink profile e^{-2|x|}, synthesized from its closed-form
 * transform 4 / (sqrt(2 pi) (xi^2 + 4)). */
kdv5_status kdv5_field_phi(const kdv5_grid* grid, kdv5_field** out);
/* Blow-up datum sum_{j=1..j_count} alphas[j-1] W(-j) phi. target_h1 > 0
 * rescales the result to that H^1 norm. */
kdv5_status kdv5_field_blowup_datum(const kdv5_grid* grid, const double* alphas,
                                    int j_count, double target_h1, kdv5_field** out);
void kdv5_field_destroy(kdv5_field* field);

kdv5_status kdv5_field_samples(const kdv5_field* field, double* out, size_t capacity);
/* H^s norm with bracket weight <xi> = 1 + |xi|. */
kdv5_status kdv5_field_sobolev_norm(const kdv5_field* field, double s, double* out);
/* Free propagation: new field W(t) u. */
kdv5_status kdv5_field_propagate(const kdv5_field* field, double t, kdv5_field** out);
/* mass = int u, l2 = int u^2, hamiltonian = int (u_xx^2 / 2 + u^3 / 6). */
kdv5_status kdv5_field_conserved(const kdv5_field* field, double* mass, double* l2,
                                 double* hamiltonian);

typedef enum kdv5_jump_method {
    KDV5_JUMP_ONE_SIDED = 0,
    KDV5_JUMP_SPECTRAL_BAND = 1
} kdv5_jump_method;

/* Derivative jump u'(x0+) - u'(x0-); x0 must be a grid point. */
kdv5_status kdv5_field_jump_estimate(const kdv5_field* field, double x0,
                                     kdv5_jump_method method, double* out);
/* Log-log slope of |coeff| over xi in [band_lo, band_hi] (>= 32 modes within
 * the dealiased spectrum). degenerate is set when the band has no signal. */
kdv5_status kdv5_field_tail_exponent(const kdv5_field* field, double band_lo,
                                     double band_hi, double* slope, int* degenerate);

/* ----------------------------------------------------------------- solver */

typedef struct kdv5_solver_config {
    double dt;
    double t_final;
    double dealias_fraction; /* <= 0 selects the default 2/3 */
    int nonlinearity_on;
    /* uniform snapshots including both endpoints; >= 2 */
    int snapshot_count;
} kdv5_solver_config;

kdv5_status kdv5_evolve(const kdv5_field* u0, const kdv5_solver_config* config,
                        kdv5_trajectory** out);
void kdv5_trajectory_destroy(kdv5_trajectory* traj);
int kdv5_trajectory_size(const kdv5_trajectory* traj);
kdv5_status kdv5_trajectory_time(const kdv5_trajectory* traj, int index, double* out);
kdv5_status kdv5_trajectory_field(const kdv5_trajectory* traj, int index,
                                  kdv5_field** out);
/* z(t_index) = u - W(t) u0, the Duhamel part of the solution. */
kdv5_status kdv5_trajectory_duhamel(const kdv5_trajectory* traj, int index,
                                    kdv5_field** out);

/* --------------------------------------------------------------- analysis */

double kdv5_bump_eval(double t, double scale);
double kdv5_phi_hat(double xi);

/* Kernel supremum integrand of the bilinear estimate at (xi, tau); a is the
 * regularity gain, b the modulation exponent (1/4 < b <= 1/2). quad_error
 * reports the refinement disagreement. */
kdv5_status kdv5_kernel_integral(double xi, double tau, double a, double b,
                                 double* value, double* quad_error);
/* Closed-form reduced bound (3/8 < b < 1/2). */
kdv5_status kdv5_reduced_bound(double xi, double tau, double a, double b, double* value);
/* Resonance function, direct and completed-square forms. */
kdv5_status kdv5_mu_forms(double xi, double xi1, double tau, double* direct,
                          double* completed);

/* ------------------------------------------------------------ experiments */

/* Run one experiment from a JSON config (schemas under configs/ in the
 * source tree). kind: simulate | blowup | kernel-scan | lemma-check | norms.
 * On success *summary_json receives a malloc'd JSON string; free it with
 * kdv5_string_free. Report files are written to the paths in the config. */
kdv5_status kdv5_run_experiment(const char* kind, const char* config_json,
                                char** summary_json);
void kdv5_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* KDV5_H */
