// Command-line front end of the fifth-order KdV laboratory. Talks to the
// shared library strictly through the C API; flags are folded into the JSON
// experiment config before dispatch.

#include <kdv5/kdv5.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using njson = nlohmann::ordered_json;

int exit_code_for(kdv5_status status) {
    switch (status) {
        case KDV5_OK:
            return 0;
        case KDV5_ERR_INVALID_ARGUMENT:
        case KDV5_ERR_CONFIG:
        case KDV5_ERR_PARAMETER:
        case KDV5_ERR_IO:
            return 1;
        default:
            return 2;
    }
}

std::optional<njson> load_config(const std::string& path, std::string& error) {
    std::ifstream f(path);
    if (!f) {
        error = "cannot read config file: " + path;
        return std::nullopt;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return njson::parse(ss.str());
    } catch (const std::exception& e) {
        error = std::string("config is not valid JSON: ") + e.what();
        return std::nullopt;
    }
}

int dispatch(const std::string& kind, const njson& config) {
    char* summary = nullptr;
    const kdv5_status status =
        kdv5_run_experiment(kind.c_str(), config.dump().c_str(), &summary);
    if (status != KDV5_OK) {
        std::cerr << "error (" << kind << "): " << kdv5_last_error() << "\n";
        return exit_code_for(status);
    }
    std::cout << summary << "\n";
    kdv5_string_free(summary);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kdv5lab - numerical experiments for the fifth-order KdV equation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_csv;
    std::string output_summary;

    auto* simulate = app.add_subcommand("simulate", "evolve an initial datum and track invariants");
    simulate->add_option("--config", config_path, "JSON experiment config")->required();

    auto* blowup = app.add_subcommand("blowup", "dispersive blow-up experiment (kink diagnostics)");
    blowup->add_option("--config", config_path, "JSON experiment config");
    bool linear_flag = false, nonlinear_flag = false;
    blowup->add_flag("--linear", linear_flag, "free evolution of the blow-up datum");
    blowup->add_flag("--nonlinear", nonlinear_flag, "full nonlinear evolution");
    blowup->add_option("-o,--output", output_csv, "kink report CSV path (or stem)");

    auto* scan = app.add_subcommand("kernel-scan", "scan the bilinear kernel bound");
    double scan_a = 0.5, scan_b = 0.45;
    scan->add_option("--config", config_path, "JSON experiment config");
    scan->add_option("--a", scan_a, "regularity gain exponent a");
    scan->add_option("--b", scan_b, "modulation exponent b");
    scan->add_option("-o,--output", output_csv, "scan CSV path");

    auto* lemma = app.add_subcommand("lemma-check", "empirical scaling probe of a localization lemma");
    std::string lemma_id = "le3";
    lemma->add_option("--config", config_path, "JSON experiment config");
    lemma->add_option("--lemma", lemma_id, "le1 | le2 | le3");
    lemma->add_option("-o,--output", output_csv, "ratio table CSV path");

    auto* norms = app.add_subcommand("norms", "Sobolev norms of a configured field");
    norms->add_option("--config", config_path, "JSON experiment config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    njson config = njson::object();
    if (!config_path.empty()) {
        std::string error;
        auto loaded = load_config(config_path, error);
        if (!loaded) {
            std::cerr << "error: " << error << "\n";
            return 1;
        }
        config = *loaded;
    }

    auto ensure_output = [&](const std::string& dflt) {
        if (!output_csv.empty()) config["output"]["csv"] = output_csv;
        if (!config.contains("output") || !config["output"].contains("csv"))
            config["output"]["csv"] = dflt;
        if (!output_summary.empty()) config["output"]["summary"] = output_summary;
    };

    if (simulate->parsed()) return dispatch("simulate", config);

    if (blowup->parsed()) {
        if (linear_flag && nonlinear_flag) {
            std::cerr << "error: --linear and --nonlinear are mutually exclusive\n";
            return 1;
        }
        if (linear_flag) config["mode"] = "linear";
        if (nonlinear_flag) config["mode"] = "nonlinear";
        if (!config.contains("mode")) config["mode"] = "linear";
        ensure_output(config["mode"] == "linear" ? "blowup_linear.csv" : "blowup_nonlinear");
        return dispatch("blowup", config);
    }

    if (scan->parsed()) {
        if (scan->count("--a") || !config.contains("a")) config["a"] = scan_a;
        if (scan->count("--b") || !config.contains("b")) config["b"] = scan_b;
        ensure_output("kernel_scan.csv");
        return dispatch("kernel-scan", config);
    }

    if (lemma->parsed()) {
        if (lemma->count("--lemma") || !config.contains("lemma")) config["lemma"] = lemma_id;
        if (!config.contains("b")) {
            // probe defaults per lemma
            const std::string id = config["lemma"].get<std::string>();
            if (id == "le2") {
                config["b"] = 0.525;
                config["b_prime"] = -0.475;
            } else if (id == "le3") {
                config["b"] = 0.0;
                config["b_prime"] = 0.45;
            } else {
                config["b"] = 0.45;
            }
        }
        ensure_output("lemma_check.csv");
        return dispatch("lemma-check", config);
    }

    if (norms->parsed()) return dispatch("norms", config);

    std::cerr << app.help() << "\n";
    return 1;
}
