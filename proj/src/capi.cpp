#include "kdv5/kdv5.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/bump.hpp"
#include "core/fft.hpp"
#include "core/jump.hpp"
#include "core/kernel.hpp"
#include "core/lab.hpp"
#include "core/propagator.hpp"
#include "core/solver.hpp"
#include "core/spectral.hpp"

using namespace kdv5;

struct kdv5_grid {
    SpatialGrid grid;
};

struct kdv5_field {
    RealField field;
};

struct kdv5_trajectory {
    Trajectory traj;
};

namespace {

thread_local std::string g_last_error;

kdv5_status fail(kdv5_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
kdv5_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return KDV5_OK;
    } catch (const InvalidArgument& e) {
        return fail(KDV5_ERR_INVALID_ARGUMENT, e.what());
    } catch (const ConfigError& e) {
        return fail(KDV5_ERR_CONFIG, e.what());
    } catch (const ParameterViolation& e) {
        return fail(KDV5_ERR_PARAMETER, e.what());
    } catch (const OverflowGuard& e) {
        return fail(KDV5_ERR_OVERFLOW_GUARD, e.what());
    } catch (const BandTooHigh& e) {
        return fail(KDV5_ERR_BAND_TOO_HIGH, e.what());
    } catch (const Instability& e) {
        return fail(KDV5_ERR_INSTABILITY, e.what());
    } catch (const NoContraction& e) {
        return fail(KDV5_ERR_NO_CONTRACTION, e.what());
    } catch (const QuadratureNonConvergence& e) {
        return fail(KDV5_ERR_QUADRATURE, e.what());
    } catch (const IoError& e) {
        return fail(KDV5_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(KDV5_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(KDV5_ERR_INTERNAL, "unknown exception");
    }
}

kdv5_status require(bool ok, const char* what) {
    return ok ? KDV5_OK : fail(KDV5_ERR_INVALID_ARGUMENT, what);
}

} // namespace

extern "C" {

const char* kdv5_version(void) { return "1.0.0"; }

const char* kdv5_last_error(void) { return g_last_error.c_str(); }

kdv5_status kdv5_grid_create(int n_points, double box_length, kdv5_grid** out) {
    if (require(out != nullptr, "grid_create: null output") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new kdv5_grid{SpatialGrid(n_points, box_length)}; });
}

void kdv5_grid_destroy(kdv5_grid* grid) { delete grid; }

int kdv5_grid_size(const kdv5_grid* grid) { return grid ? grid->grid.size() : 0; }

double kdv5_grid_box_length(const kdv5_grid* grid) {
    return grid ? grid->grid.box_length() : 0.0;
}

kdv5_status kdv5_field_create(const kdv5_grid* grid, const double* samples,
                              kdv5_field** out) {
    if (require(grid && samples && out, "field_create: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<double> s(samples, samples + grid->grid.size());
        *out = new kdv5_field{RealField(grid->grid, std::move(s))};
    });
}

kdv5_status kdv5_field_phi(const kdv5_grid* grid, kdv5_field** out) {
    if (require(grid && out, "field_phi: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new kdv5_field{phi_field(grid->grid)}; });
}

kdv5_status kdv5_field_blowup_datum(const kdv5_grid* grid, const double* alphas,
                                    int j_count, double target_h1, kdv5_field** out) {
    if (require(grid && out && (j_count == 0 || alphas),
                "field_blowup_datum: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        BlowupSchedule schedule(std::vector<double>(alphas, alphas + j_count));
        BlowupDatum d = build_blowup_datum(schedule, grid->grid);
        if (target_h1 > 0.0 && d.h1_norm > 0.0) {
            const double scale = target_h1 / d.h1_norm;
            for (auto& v : d.field.samples) v *= scale;
        }
        *out = new kdv5_field{std::move(d.field)};
    });
}

void kdv5_field_destroy(kdv5_field* field) { delete field; }

kdv5_status kdv5_field_samples(const kdv5_field* field, double* out, size_t capacity) {
    if (require(field && out, "field_samples: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    if (capacity < field->field.samples.size())
        return fail(KDV5_ERR_INVALID_ARGUMENT, "field_samples: buffer too small");
    std::memcpy(out, field->field.samples.data(),
                field->field.samples.size() * sizeof(double));
    return KDV5_OK;
}

kdv5_status kdv5_field_sobolev_norm(const kdv5_field* field, double s, double* out) {
    if (require(field && out, "sobolev_norm: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = sobolev_norm(forward_transform(field->field), s); });
}

kdv5_status kdv5_field_propagate(const kdv5_field* field, double t, kdv5_field** out) {
    if (require(field && out, "propagate: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new kdv5_field{
            inverse_transform(apply_w(forward_transform(field->field), t))};
    });
}

kdv5_status kdv5_field_conserved(const kdv5_field* field, double* mass, double* l2,
                                 double* hamiltonian) {
    if (require(field && mass && l2 && hamiltonian, "conserved: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Diagnostics d = conserved_quantities(field->field);
        *mass = d.mass;
        *l2 = d.l2;
        *hamiltonian = d.hamiltonian;
    });
}

kdv5_status kdv5_field_jump_estimate(const kdv5_field* field, double x0,
                                     kdv5_jump_method method, double* out) {
    if (require(field && out, "jump_estimate: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const JumpMethod m = method == KDV5_JUMP_ONE_SIDED ? JumpMethod::one_sided
                                                           : JumpMethod::spectral_band;
        *out = jump_estimate(field->field, x0, m);
    });
}

kdv5_status kdv5_field_tail_exponent(const kdv5_field* field, double band_lo,
                                     double band_hi, double* slope, int* degenerate) {
    if (require(field && slope && degenerate, "tail_exponent: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const TailFit fit =
            tail_exponent_fit(forward_transform(field->field), band_lo, band_hi);
        *slope = fit.slope;
        *degenerate = fit.degenerate ? 1 : 0;
    });
}

kdv5_status kdv5_evolve(const kdv5_field* u0, const kdv5_solver_config* config,
                        kdv5_trajectory** out) {
    if (require(u0 && config && out, "evolve: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        SolverConfig sc;
        sc.dt = config->dt;
        sc.t_final = config->t_final;
        if (config->dealias_fraction > 0.0) sc.dealias_fraction = config->dealias_fraction;
        sc.nonlinearity_on = config->nonlinearity_on != 0;
        const int count = config->snapshot_count;
        if (count < 2) throw InvalidArgument("evolve: snapshot_count must be >= 2");
        for (int i = 0; i < count; ++i)
            sc.snapshot_times.push_back(sc.t_final * i / (count - 1));
        *out = new kdv5_trajectory{evolve(u0->field, sc)};
    });
}

void kdv5_trajectory_destroy(kdv5_trajectory* traj) { delete traj; }

int kdv5_trajectory_size(const kdv5_trajectory* traj) {
    return traj ? static_cast<int>(traj->traj.snapshots.size()) : 0;
}

kdv5_status kdv5_trajectory_time(const kdv5_trajectory* traj, int index, double* out) {
    if (require(traj && out, "trajectory_time: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    if (index < 0 || index >= kdv5_trajectory_size(traj))
        return fail(KDV5_ERR_INVALID_ARGUMENT, "trajectory_time: index out of range");
    *out = traj->traj.snapshots[index].time;
    return KDV5_OK;
}

kdv5_status kdv5_trajectory_field(const kdv5_trajectory* traj, int index,
                                  kdv5_field** out) {
    if (require(traj && out, "trajectory_field: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    if (index < 0 || index >= kdv5_trajectory_size(traj))
        return fail(KDV5_ERR_INVALID_ARGUMENT, "trajectory_field: index out of range");
    return guarded([&] { *out = new kdv5_field{traj->traj.snapshots[index].field}; });
}

kdv5_status kdv5_trajectory_duhamel(const kdv5_trajectory* traj, int index,
                                    kdv5_field** out) {
    if (require(traj && out, "trajectory_duhamel: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    if (index < 0 || index >= kdv5_trajectory_size(traj))
        return fail(KDV5_ERR_INVALID_ARGUMENT, "trajectory_duhamel: index out of range");
    return guarded([&] {
        const Snapshot& s = traj->traj.snapshots[index];
        SpectralField z = s.spectrum;
        for (int k = 0; k < z.size(); ++k)
            z.coefficients[k] -= s.linear_part.coefficients[k];
        *out = new kdv5_field{inverse_transform(z)};
    });
}

double kdv5_bump_eval(double t, double scale) {
    return scale > 0.0 ? bump_eval(t, scale) : 0.0;
}

double kdv5_phi_hat(double xi) { return phi_hat(xi); }

kdv5_status kdv5_kernel_integral(double xi, double tau, double a, double b, double* value,
                                 double* quad_error) {
    if (require(value != nullptr, "kernel_integral: null output") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        KernelParams p;
        p.a = a;
        p.b = b;
        const KernelValue v = kernel_integral(xi, tau, p);
        *value = v.value;
        if (quad_error) *quad_error = v.quad_error;
    });
}

kdv5_status kdv5_reduced_bound(double xi, double tau, double a, double b, double* value) {
    if (require(value != nullptr, "reduced_bound: null output") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        KernelParams p;
        p.a = a;
        p.b = b;
        *value = reduced_bound(xi, tau, p);
    });
}

kdv5_status kdv5_mu_forms(double xi, double xi1, double tau, double* direct,
                          double* completed) {
    if (require(direct && completed, "mu_forms: null output") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    const auto [d, c] = mu_forms(xi, xi1, tau);
    *direct = d;
    *completed = c;
    return KDV5_OK;
}

kdv5_status kdv5_run_experiment(const char* kind, const char* config_json,
                                char** summary_json) {
    if (require(kind && config_json && summary_json,
                "run_experiment: null argument") != KDV5_OK)
        return KDV5_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const std::string summary = run_experiment(kind, config_json);
        char* buf = static_cast<char*>(std::malloc(summary.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, summary.c_str(), summary.size() + 1);
        *summary_json = buf;
    });
}

void kdv5_string_free(char* str) { std::free(str); }

} // extern "C"
