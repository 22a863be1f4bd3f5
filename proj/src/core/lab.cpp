#include "lab.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "fft.hpp"
#include "parallel.hpp"
#include "spectral.hpp"

namespace kdv5 {

namespace {

using njson = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

long long cadence_index(double t, double cadence, const char* ctx) {
    const double q = t / cadence;
    if (std::abs(q - std::llround(q)) > 1e-9)
        throw InvalidArgument(std::string(ctx) + ": time " + std::to_string(t) +
                              " does not sit on the cadence grid");
    return std::llround(q);
}

std::vector<double> resolve_observation_times(const BlowupExperimentSpec& spec) {
    const double c = spec.cadence;
    if (!(c > 0.0) ||
        std::abs(0.5 / c - std::llround(0.5 / c)) > 1e-9)
        throw InvalidArgument("blowup: cadence must be positive and divide 1/2 so that "
                              "integers and midpoints land on the observation grid");
    std::vector<double> times;
    if (spec.observation_times.has_value()) {
        times = *spec.observation_times;
        for (size_t i = 0; i < times.size(); ++i) {
            cadence_index(times[i], c, "blowup observation_times");
            if (times[i] < 0.0 || times[i] > spec.t_final + 1e-9)
                throw InvalidArgument("blowup: observation times must lie in [0, t_final]");
            if (i > 0 && times[i] <= times[i - 1])
                throw InvalidArgument("blowup: observation times must be increasing");
        }
        if (!times.empty()) {
            // required coverage: every integer n and midpoint n + 1/2 up to t_final
            auto has = [&](double t) {
                for (double v : times)
                    if (std::abs(v - t) < 1e-9) return true;
                return false;
            };
            for (int n = 1; n <= static_cast<int>(spec.t_final + 1e-9); ++n)
                if (!has(n))
                    throw InvalidArgument("blowup: observation times must include every "
                                          "integer <= t_final");
            for (double m = 0.5; m <= spec.t_final + 1e-9; m += 1.0)
                if (!has(m))
                    throw InvalidArgument("blowup: observation times must include every "
                                          "midpoint n + 1/2 <= t_final");
        }
    } else {
        const long long q_final = cadence_index(spec.t_final, c, "blowup t_final");
        for (long long q = 0; q <= q_final; ++q) times.push_back(q * c);
    }
    return times;
}

KinkRow kink_row(const SpectralField& spec_field, double t,
                 const BlowupExperimentSpec& spec) {
    KinkRow row;
    row.t = t;
    row.jump_spectral = jump_estimate(spec_field, 0.0, JumpMethod::spectral_band, spec.jump);
    row.jump_one_sided = jump_estimate(spec_field, 0.0, JumpMethod::one_sided);
    const double xm = spec_field.grid().xi_max();
    TailFit fit = tail_exponent_fit(spec_field, spec.jump.band_lo_frac * xm,
                                    spec.jump.band_hi_frac * xm,
                                    spec.jump.dealias_fraction);
    row.tail_degenerate = fit.degenerate;
    row.tail_exponent = fit.degenerate ? 0.0 : fit.slope;
    row.h1_norm = sobolev_norm(spec_field, 1.0);
    for (double s : spec.s_list) row.hs_norms.push_back(sobolev_norm(spec_field, s));
    return row;
}

} // namespace

KinkReport run_linear_blowup(const BlowupExperimentSpec& spec) {
    const SpatialGrid grid(spec.grid_n, spec.box_length);
    const std::vector<double> times = resolve_observation_times(spec);
    KinkReport report;
    report.s_list = spec.s_list;
    if (times.empty()) return report;

    BlowupDatum datum = build_blowup_datum(spec.schedule, grid, spec.cadence);
    SpectralField u0 = datum.spectrum;
    if (spec.target_h1 > 0.0 && datum.h1_norm > 0.0) {
        const double scale = spec.target_h1 / datum.h1_norm;
        for (auto& c : u0.coefficients) c *= scale;
    }

    const WPhaseTable phases(grid, spec.cadence);
    report.rows.resize(times.size());
    parallel_for(static_cast<int>(times.size()), [&](int i) {
        const long long q = cadence_index(times[i], spec.cadence, "blowup");
        report.rows[i] = kink_row(phases.apply(u0, q), times[i], spec);
    });
    return report;
}

NonlinearBlowupReport run_nonlinear_blowup(const BlowupExperimentSpec& spec) {
    if (!(spec.target_h1 > 0.0) || spec.target_h1 > 0.01 + 1e-12)
        throw ParameterViolation("nonlinear blowup: target_h1 must lie in (0, 0.01] "
                                 "(small-data hypothesis)");
    NonlinearBlowupReport rep;

    if (!spec.nonlinearity_on) {
        rep.linear = run_linear_blowup(spec);
        rep.full = rep.linear;
        rep.duhamel.s_list = spec.s_list;
        return rep;
    }

    const SpatialGrid grid(spec.grid_n, spec.box_length);
    const std::vector<double> times = resolve_observation_times(spec);
    rep.full.s_list = rep.linear.s_list = rep.duhamel.s_list = spec.s_list;
    if (times.empty()) return rep;

    BlowupDatum datum = build_blowup_datum(spec.schedule, grid, spec.cadence);
    SpectralField u0 = datum.spectrum;
    if (datum.h1_norm > 0.0) {
        rep.rescale_factor = spec.target_h1 / datum.h1_norm;
        for (auto& c : u0.coefficients) c *= rep.rescale_factor;
    }

    SolverConfig config;
    config.dt = spec.dt;
    config.t_final = times.back() > 0.0 ? times.back() : spec.t_final;
    config.snapshot_times = times;
    if (config.t_final <= 0.0) config.t_final = spec.cadence; // t = 0 only
    Trajectory traj = evolve(inverse_transform(u0), config);

    const WPhaseTable phases(grid, spec.cadence);
    rep.full.rows.resize(times.size());
    rep.linear.rows.resize(times.size());
    rep.duhamel.rows.resize(times.size());
    parallel_for(static_cast<int>(times.size()), [&](int i) {
        const double t = times[i];
        const Snapshot* snap = nullptr;
        for (const Snapshot& s : traj.snapshots)
            if (std::abs(s.time - t) < 1e-9) snap = &s;
        if (!snap) throw Instability("nonlinear blowup: missing snapshot at t = " +
                                     std::to_string(t));
        rep.full.rows[i] = kink_row(snap->spectrum, t, spec);
        const long long q = cadence_index(t, spec.cadence, "blowup");
        rep.linear.rows[i] = kink_row(phases.apply(u0, q), t, spec);
        SpectralField z = snap->spectrum;
        for (int k = 0; k < z.size(); ++k)
            z.coefficients[k] -= snap->linear_part.coefficients[k];
        rep.duhamel.rows[i] = kink_row(z, t, spec);
    });
    return rep;
}

RegularityGainResult run_regularity_gain(const RegularityGainSpec& spec) {
    if (spec.s < 0.0 || !(spec.b > 0.4) || !(spec.b < 0.5) || spec.a < 0.0 ||
        spec.a > 10.0 * spec.b - 4.0 + 1e-12)
        throw ParameterViolation("regularity gain: need s >= 0, 2/5 < b < 1/2, "
                                 "0 <= a <= 10 b - 4");
    const SpatialGrid grid(spec.grid_n, spec.box_length);
    RealField gauss = [&] {
        std::vector<double> s(grid.size());
        for (int m = 0; m < grid.size(); ++m) {
            const double x = grid.x(m);
            s[m] = std::exp(-x * x / (2.0 * spec.sigma * spec.sigma));
        }
        return RealField(grid, std::move(s));
    }();
    const double norm0 = l2_norm(gauss);
    for (auto& v : gauss.samples) v *= spec.datum_l2 / norm0;

    PicardParams pp;
    pp.T = spec.T;
    pp.iterations = spec.iterations;
    pp.weight = {spec.s, spec.b};
    pp.time_levels = spec.time_levels;
    PicardResult pr = picard_iterate(gauss, pp);

    RegularityGainResult out;
    out.picard_ratios = pr.ratios;
    const double xsb = xsb_norm(embed_window(pr.iterates.back(), -2.0, 2.0), pp.weight);
    out.xsb_sq = xsb * xsb;

    const int m = spec.time_levels;
    const double h = 2.0 / m;
    for (int l = m / 2; l < m; ++l) {
        const double t = -1.0 + l * h;
        if (t > spec.T + 1e-9) break;
        SpectralField z = pr.limit_spectra[l];
        for (int k = 0; k < z.size(); ++k)
            z.coefficients[k] -= pr.linear_spectra[l].coefficients[k];
        out.z_sup_norm = std::max(out.z_sup_norm, sobolev_norm(z, spec.s + spec.a));
    }
    out.ratio = out.z_sup_norm / out.xsb_sq;
    return out;
}

namespace {

void open_output(std::ofstream& f, const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    f.open(path);
    if (!f) throw IoError("cannot open output file: " + path);
}

} // namespace

void write_kink_csv(const KinkReport& report, const std::string& path) {
    std::ofstream f;
    open_output(f, path);
    f << "t,jump_one_sided,jump_spectral,tail_exponent,h1_norm";
    for (double s : report.s_list) f << ",hs_s" << fmt(s);
    f << "\n";
    for (const KinkRow& r : report.rows) {
        f << fmt(r.t) << "," << fmt(r.jump_one_sided) << "," << fmt(r.jump_spectral) << ","
          << fmt(r.tail_exponent) << "," << fmt(r.h1_norm);
        for (double v : r.hs_norms) f << "," << fmt(v);
        f << "\n";
    }
    if (!f) throw IoError("failed writing " + path);
}

void write_scan_csv(const ScanReport& report, const std::string& path) {
    std::ofstream f;
    open_output(f, path);
    f << "xi,tau,kernel,reduced,ratio,quad_error\n";
    auto rows = [&](const std::vector<ScanPoint>& pts) {
        for (const ScanPoint& p : pts)
            f << fmt(p.xi) << "," << fmt(p.tau) << "," << fmt(p.kernel) << ","
              << fmt(p.reduced) << "," << fmt(p.ratio) << "," << fmt(p.quad_error) << "\n";
    };
    rows(report.lattice);
    rows(report.curve_resonant);
    rows(report.curve_sixteenth);
    if (!f) throw IoError("failed writing " + path);
}

// ---------------------------------------------------------------------------
// config-driven runner
// ---------------------------------------------------------------------------

namespace {

void check_keys(const njson& j, const std::set<std::string>& allowed,
                const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(ctx + ": unknown key \"" + it.key() + "\"");
}

double get_num(const njson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError("missing or non-numeric field \"" + key + "\"");
    return j[key].get<double>();
}

double get_num_or(const njson& j, const std::string& key, double dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number()) throw ConfigError("non-numeric field \"" + key + "\"");
    return j[key].get<double>();
}

long long get_int(const njson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ConfigError("missing or non-integer field \"" + key + "\"");
    return j[key].get<long long>();
}

long long get_int_or(const njson& j, const std::string& key, long long dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number_integer()) throw ConfigError("non-integer field \"" + key + "\"");
    return j[key].get<long long>();
}

bool get_bool_or(const njson& j, const std::string& key, bool dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_boolean()) throw ConfigError("non-boolean field \"" + key + "\"");
    return j[key].get<bool>();
}

std::string get_str(const njson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ConfigError("missing or non-string field \"" + key + "\"");
    return j[key].get<std::string>();
}

const njson& get_obj(const njson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_object())
        throw ConfigError("missing or non-object field \"" + key + "\"");
    return j[key];
}

std::vector<double> get_num_list(const njson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ConfigError("missing or non-array field \"" + key + "\"");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ConfigError("non-numeric entry in \"" + key + "\"");
        out.push_back(v.get<double>());
    }
    return out;
}

SpatialGrid parse_grid(const njson& j) {
    check_keys(j, {"n", "box_length"}, "grid");
    return SpatialGrid(static_cast<int>(get_int(j, "n")), get_num(j, "box_length"));
}

BlowupSchedule parse_schedule(const njson& j) {
    check_keys(j, {"j", "rate", "alphas"}, "schedule");
    if (j.contains("alphas")) return BlowupSchedule(get_num_list(j, "alphas"));
    const int jmax = static_cast<int>(get_int(j, "j"));
    const double rate = get_num_or(j, "rate", 6.737946999085467e-3);
    return BlowupSchedule::geometric(jmax, rate);
}

RealField parse_initial(const njson& j, const SpatialGrid& g) {
    check_keys(j, {"type", "amplitude", "sigma", "center", "schedule", "target_h1"},
               "initial");
    const std::string type = get_str(j, "type");
    if (type == "gaussian") {
        const double amp = get_num(j, "amplitude");
        const double sigma = get_num(j, "sigma");
        const double center = get_num_or(j, "center", 0.0);
        std::vector<double> s(g.size());
        for (int m = 0; m < g.size(); ++m) {
            const double x = g.x(m) - center;
            s[m] = amp * std::exp(-x * x / (2.0 * sigma * sigma));
        }
        return RealField(g, std::move(s));
    }
    if (type == "phi") {
        const double amp = get_num_or(j, "amplitude", 1.0);
        RealField f = phi_field(g);
        for (auto& v : f.samples) v *= amp;
        return f;
    }
    if (type == "blowup_datum") {
        BlowupDatum d = build_blowup_datum(parse_schedule(get_obj(j, "schedule")), g);
        const double target = get_num_or(j, "target_h1", 0.0);
        if (target > 0.0 && d.h1_norm > 0.0) {
            const double scale = target / d.h1_norm;
            for (auto& v : d.field.samples) v *= scale;
        }
        return d.field;
    }
    throw ConfigError("initial.type must be gaussian | phi | blowup_datum");
}

struct OutputPaths {
    std::string csv;
    std::string summary;
};

OutputPaths parse_output(const njson& j, bool csv_required) {
    OutputPaths out;
    if (!j.contains("output")) {
        if (csv_required) throw ConfigError("config needs an \"output\" object");
        return out;
    }
    check_keys(j["output"], {"csv", "summary"}, "output");
    if (j["output"].contains("csv")) out.csv = get_str(j["output"], "csv");
    if (j["output"].contains("summary")) out.summary = get_str(j["output"], "summary");
    if (csv_required && out.csv.empty())
        throw ConfigError("config needs output.csv");
    return out;
}

void emit_summary(const njson& summary, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f;
    open_output(f, path);
    f << summary.dump(2) << "\n";
    if (!f) throw IoError("failed writing " + path);
}

njson run_simulate(const njson& cfg) {
    check_keys(cfg,
               {"grid", "initial", "dt", "t_final", "dealias_fraction", "nonlinearity_on",
                "snapshot_count", "output"},
               "simulate");
    const SpatialGrid grid = parse_grid(get_obj(cfg, "grid"));
    RealField u0 = parse_initial(get_obj(cfg, "initial"), grid);

    SolverConfig sc;
    sc.dt = get_num(cfg, "dt");
    sc.t_final = get_num(cfg, "t_final");
    sc.dealias_fraction = get_num_or(cfg, "dealias_fraction", 2.0 / 3.0);
    sc.nonlinearity_on = get_bool_or(cfg, "nonlinearity_on", true);
    const int count = static_cast<int>(get_int_or(cfg, "snapshot_count", 17));
    if (count < 2) throw ConfigError("snapshot_count must be >= 2");
    for (int i = 0; i <= count - 1; ++i)
        sc.snapshot_times.push_back(sc.t_final * i / (count - 1));

    OutputPaths out = parse_output(cfg, true);
    Trajectory traj = evolve(u0, sc);

    std::ofstream f;
    open_output(f, out.csv);
    f << "t,mass,l2,hamiltonian,h1_norm\n";
    for (const Snapshot& s : traj.snapshots)
        f << fmt(s.time) << "," << fmt(s.diagnostics.mass) << "," << fmt(s.diagnostics.l2)
          << "," << fmt(s.diagnostics.hamiltonian) << ","
          << fmt(sobolev_norm(s.spectrum, 1.0)) << "\n";
    f.close();

    const Diagnostics& first = traj.snapshots.front().diagnostics;
    double mass_drift = 0.0, l2_drift = 0.0, ham_drift = 0.0;
    for (const Snapshot& s : traj.snapshots) {
        mass_drift = std::max(mass_drift, std::abs(s.diagnostics.mass - first.mass));
        l2_drift = std::max(l2_drift, std::abs(s.diagnostics.l2 - first.l2));
        ham_drift = std::max(ham_drift, std::abs(s.diagnostics.hamiltonian - first.hamiltonian));
    }
    njson summary;
    summary["experiment"] = "simulate";
    summary["snapshots"] = traj.snapshots.size();
    summary["t_final"] = sc.t_final;
    summary["mass_drift"] = mass_drift;
    summary["l2_drift"] = l2_drift;
    summary["hamiltonian_drift"] = ham_drift;
    summary["csv"] = out.csv;
    emit_summary(summary, out.summary);
    return summary;
}

BlowupExperimentSpec parse_blowup_spec(const njson& cfg) {
    BlowupExperimentSpec spec;
    if (cfg.contains("grid")) {
        const SpatialGrid g = parse_grid(cfg["grid"]);
        spec.grid_n = g.size();
        spec.box_length = g.box_length();
    }
    if (cfg.contains("schedule")) spec.schedule = parse_schedule(cfg["schedule"]);
    spec.t_final = get_num_or(cfg, "t_final", spec.t_final);
    spec.cadence = get_num_or(cfg, "cadence", spec.cadence);
    spec.target_h1 = get_num_or(cfg, "target_h1", spec.target_h1);
    spec.dt = get_num_or(cfg, "dt", spec.dt);
    spec.nonlinearity_on = get_bool_or(cfg, "nonlinearity_on", true);
    if (cfg.contains("s_list")) spec.s_list = get_num_list(cfg, "s_list");
    if (cfg.contains("observation_times"))
        spec.observation_times = get_num_list(cfg, "observation_times");
    spec.jump.cadence_step = spec.cadence;
    return spec;
}

njson integer_rows(const KinkReport& rep) {
    njson rows = njson::array();
    for (const KinkRow& r : rep.rows) {
        if (std::abs(r.t - std::lround(r.t)) > 1e-9 || r.t < 0.5) continue;
        njson row;
        row["t"] = r.t;
        row["jump_spectral"] = r.jump_spectral;
        row["jump_one_sided"] = r.jump_one_sided;
        row["tail_exponent"] = r.tail_exponent;
        rows.push_back(row);
    }
    return rows;
}

njson run_blowup(const njson& cfg) {
    check_keys(cfg,
               {"mode", "grid", "schedule", "t_final", "cadence", "target_h1", "dt",
                "nonlinearity_on", "s_list", "observation_times", "output"},
               "blowup");
    const std::string mode = get_str(cfg, "mode");
    BlowupExperimentSpec spec = parse_blowup_spec(cfg);
    OutputPaths out = parse_output(cfg, true);

    njson summary;
    summary["experiment"] = "blowup";
    summary["mode"] = mode;
    summary["truncation_j"] = spec.schedule.truncation();
    summary["summability_sum"] = spec.schedule.summability_sum();
    // the truncated schedule only certifies kinks up to t = J - 1
    summary["certified_window"] = njson::array(
        {0.0, std::max(0.0, static_cast<double>(spec.schedule.truncation() - 1))});

    if (mode == "linear") {
        KinkReport rep = run_linear_blowup(spec);
        write_kink_csv(rep, out.csv);
        summary["rows"] = rep.rows.size();
        summary["integer_times"] = integer_rows(rep);
        summary["csv"] = out.csv;
    } else if (mode == "nonlinear") {
        if (!(spec.target_h1 > 0.0)) spec.target_h1 = 0.01;
        NonlinearBlowupReport rep = run_nonlinear_blowup(spec);
        const std::string stem = out.csv;
        write_kink_csv(rep.full, stem + "_full.csv");
        write_kink_csv(rep.linear, stem + "_linear.csv");
        write_kink_csv(rep.duhamel, stem + "_duhamel.csv");
        summary["rows"] = rep.full.rows.size();
        summary["rescale_factor"] = rep.rescale_factor;
        summary["integer_times_linear"] = integer_rows(rep.linear);
        summary["integer_times_duhamel"] = integer_rows(rep.duhamel);
        njson ratios = njson::array();
        for (size_t i = 0; i < rep.linear.rows.size(); ++i) {
            const KinkRow& lin = rep.linear.rows[i];
            if (std::abs(lin.t - std::lround(lin.t)) > 1e-9 || lin.t < 0.5) continue;
            njson row;
            row["t"] = lin.t;
            row["z_over_linear_jump"] =
                rep.duhamel.rows.empty()
                    ? 0.0
                    : std::abs(rep.duhamel.rows[i].jump_spectral / lin.jump_spectral);
            ratios.push_back(row);
        }
        summary["z_jump_ratios"] = ratios;
        summary["csv"] = njson::array(
            {stem + "_full.csv", stem + "_linear.csv", stem + "_duhamel.csv"});
    } else {
        throw ConfigError("blowup mode must be \"linear\" or \"nonlinear\"");
    }
    emit_summary(summary, out.summary);
    return summary;
}

njson run_kernel_scan(const njson& cfg) {
    check_keys(cfg,
               {"a", "b", "rel_tol", "refine", "xi_step", "xi_max", "tau_list", "curve_xi",
                "fit_min_xi", "output"},
               "kernel-scan");
    KernelParams p;
    p.a = get_num(cfg, "a");
    p.b = get_num(cfg, "b");
    p.rel_tol = get_num_or(cfg, "rel_tol", p.rel_tol);
    p.refine_check = get_bool_or(cfg, "refine", true);
    ScanSpec spec = ScanSpec::defaults(p);
    if (cfg.contains("xi_step") || cfg.contains("xi_max")) {
        const double step = get_num_or(cfg, "xi_step", 0.25);
        const double xmax = get_num_or(cfg, "xi_max", 4.0);
        if (!(step > 0.0) || !(xmax >= step)) throw ConfigError("bad xi lattice");
        spec.xi_lattice.clear();
        for (double x = step; x <= xmax + 1e-12; x += step) {
            spec.xi_lattice.push_back(x);
            spec.xi_lattice.push_back(-x);
        }
    }
    if (cfg.contains("tau_list")) spec.tau_lattice = get_num_list(cfg, "tau_list");
    if (cfg.contains("curve_xi")) spec.curve_xi = get_num_list(cfg, "curve_xi");
    spec.fit_min_xi = get_num_or(cfg, "fit_min_xi", spec.fit_min_xi);
    OutputPaths out = parse_output(cfg, true);

    ScanReport rep = sup_scan(spec);
    write_scan_csv(rep, out.csv);

    njson summary;
    summary["experiment"] = "kernel-scan";
    summary["a"] = p.a;
    summary["b"] = p.b;
    summary["params_valid"] = p.valid();
    summary["points"] =
        rep.lattice.size() + rep.curve_resonant.size() + rep.curve_sixteenth.size();
    summary["max_kernel"] = rep.max_kernel;
    summary["c_star"] = rep.c_star;
    summary["tail_exponent_resonant"] = rep.tail_exponent_resonant;
    summary["tail_exponent_sixteenth"] = rep.tail_exponent_sixteenth;
    summary["csv"] = out.csv;
    emit_summary(summary, out.summary);
    return summary;
}

njson run_lemma_check(const njson& cfg) {
    check_keys(cfg,
               {"lemma", "s", "b", "b_prime", "t_list", "grid", "time_levels", "max_mode",
                "t_sigma", "seed", "output"},
               "lemma-check");
    const std::string lemma = get_str(cfg, "lemma");
    LemmaId id;
    if (lemma == "le1")
        id = LemmaId::le1;
    else if (lemma == "le2")
        id = LemmaId::le2;
    else if (lemma == "le3")
        id = LemmaId::le3;
    else
        throw ConfigError("lemma must be le1 | le2 | le3");

    LemmaProbeParams p;
    p.s = get_num_or(cfg, "s", 0.0);
    p.b = get_num(cfg, "b");
    p.b_prime = get_num_or(cfg, "b_prime", p.b_prime);
    if (cfg.contains("grid")) {
        const SpatialGrid g = parse_grid(cfg["grid"]);
        p.grid_n = g.size();
        p.box_length = g.box_length();
    }
    p.time_levels = static_cast<int>(get_int_or(cfg, "time_levels", p.time_levels));
    p.max_mode = static_cast<int>(get_int_or(cfg, "max_mode", p.max_mode));
    p.t_sigma = get_num_or(cfg, "t_sigma", p.t_sigma);
    p.seed = static_cast<std::uint64_t>(get_int_or(cfg, "seed", 1));
    std::vector<double> t_list = cfg.contains("t_list")
                                     ? get_num_list(cfg, "t_list")
                                     : std::vector<double>{0.5, 0.25, 0.125, 0.0625,
                                                           0.03125, 0.015625};
    OutputPaths out = parse_output(cfg, true);

    LemmaProbeResult res = lemma_scaling_probe(id, p, t_list);

    std::ofstream f;
    open_output(f, out.csv);
    f << "T,lhs,rhs,ratio\n";
    for (size_t i = 0; i < res.t_list.size(); ++i)
        f << fmt(res.t_list[i]) << "," << fmt(res.lhs[i]) << "," << fmt(res.rhs[i]) << ","
          << fmt(res.ratios[i]) << "\n";
    f.close();

    njson summary;
    summary["experiment"] = "lemma-check";
    summary["lemma"] = lemma;
    summary["claimed_exponent"] = res.claimed_exponent;
    summary["fitted_slope"] = res.fitted_slope;
    summary["fitted_constant"] = res.fitted_constant;
    if (id == LemmaId::le1) summary["scaling_invariance"] = res.scaling_invariance;
    summary["csv"] = out.csv;
    emit_summary(summary, out.summary);
    return summary;
}

njson run_regularity_gain_cfg(const njson& cfg) {
    check_keys(cfg,
               {"s", "b", "a", "T", "grid", "time_levels", "iterations", "datum_l2",
                "sigma", "output"},
               "regularity-gain");
    RegularityGainSpec spec;
    spec.s = get_num_or(cfg, "s", spec.s);
    spec.b = get_num_or(cfg, "b", spec.b);
    spec.a = get_num_or(cfg, "a", spec.a);
    spec.T = get_num_or(cfg, "T", spec.T);
    if (cfg.contains("grid")) {
        const SpatialGrid g = parse_grid(cfg["grid"]);
        spec.grid_n = g.size();
        spec.box_length = g.box_length();
    }
    spec.time_levels = static_cast<int>(get_int_or(cfg, "time_levels", spec.time_levels));
    spec.iterations = static_cast<int>(get_int_or(cfg, "iterations", spec.iterations));
    spec.datum_l2 = get_num_or(cfg, "datum_l2", spec.datum_l2);
    spec.sigma = get_num_or(cfg, "sigma", spec.sigma);
    OutputPaths out = parse_output(cfg, false);

    RegularityGainResult res = run_regularity_gain(spec);
    njson summary;
    summary["experiment"] = "regularity-gain";
    summary["s"] = spec.s;
    summary["b"] = spec.b;
    summary["a"] = spec.a;
    summary["T"] = spec.T;
    summary["z_sup_norm"] = res.z_sup_norm;
    summary["xsb_sq"] = res.xsb_sq;
    summary["ratio"] = res.ratio;
    summary["picard_ratios"] = res.picard_ratios;
    emit_summary(summary, out.summary);
    return summary;
}

njson run_norms(const njson& cfg) {
    check_keys(cfg, {"grid", "field", "s_list", "output"}, "norms");
    const SpatialGrid grid = parse_grid(get_obj(cfg, "grid"));
    RealField f = parse_initial(get_obj(cfg, "field"), grid);
    std::vector<double> s_list = cfg.contains("s_list")
                                     ? get_num_list(cfg, "s_list")
                                     : std::vector<double>{0.0, 0.45, 1.0};
    OutputPaths out = parse_output(cfg, false);

    SpectralField F = forward_transform(f);
    njson norms = njson::array();
    for (double s : s_list) {
        njson row;
        row["s"] = s;
        row["h_s"] = sobolev_norm(F, s);
        norms.push_back(row);
    }
    if (!out.csv.empty()) {
        std::ofstream fo;
        open_output(fo, out.csv);
        fo << "s,h_s\n";
        for (double s : s_list) fo << fmt(s) << "," << fmt(sobolev_norm(F, s)) << "\n";
    }
    njson summary;
    summary["experiment"] = "norms";
    summary["l2"] = l2_norm(f);
    summary["max_abs"] = f.max_abs();
    summary["norms"] = norms;
    emit_summary(summary, out.summary);
    return summary;
}

} // namespace

std::string run_experiment(const std::string& kind, const std::string& config_json) {
    njson cfg;
    try {
        cfg = njson::parse(config_json);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    njson summary;
    if (kind == "simulate")
        summary = run_simulate(cfg);
    else if (kind == "blowup")
        summary = run_blowup(cfg);
    else if (kind == "kernel-scan")
        summary = run_kernel_scan(cfg);
    else if (kind == "lemma-check")
        summary = run_lemma_check(cfg);
    else if (kind == "regularity-gain")
        summary = run_regularity_gain_cfg(cfg);
    else if (kind == "norms")
        summary = run_norms(cfg);
    else
        throw ConfigError("unknown experiment kind: " + kind);
    return summary.dump(2);
}

} // namespace kdv5
