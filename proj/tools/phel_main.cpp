#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phel/cli_ops.hpp"

namespace {

using phel::cliops::RunOptions;

void apply_config_file(phel::params::PhysicalConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    f >> j;
    if (j.contains("photon_energy_eV")) cfg.photon_energy_eV = j["photon_energy_eV"];
    if (j.contains("intensity_W_cm2")) cfg.intensity_W_cm2 = j["intensity_W_cm2"];
    if (j.contains("packet_width_cm")) cfg.packet_width_cm = j["packet_width_cm"];
    if (j.contains("lambda_over_w")) cfg.lambda_over_w = j["lambda_over_w"];
    if (j.contains("n0")) cfg.n0 = j["n0"];
    if (j.contains("plasma_ratio")) cfg.plasma_ratio = j["plasma_ratio"];
    if (j.contains("bandwidth_ratio")) cfg.bandwidth_ratio = j["bandwidth_ratio"];
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"photon-electron entanglement datasets and verification"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    RunOptions opts;
    std::string config_path, format = "csv";
    bool have_intensity = false, have_energy = false, have_lw = false, have_n0 = false;
    double intensity = 0.0, energy = 0.0, lw = 0.0;
    long n0 = 0;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--intensity", intensity, "intensity in W/cm^2")
        ->each([&](const std::string&) { have_intensity = true; });
    app.add_option("--photon-energy", energy, "photon energy in eV")
        ->each([&](const std::string&) { have_energy = true; });
    app.add_option("--lambda-over-w", lw, "wavelength / packet width")
        ->each([&](const std::string&) { have_lw = true; });
    app.add_option("--n0", n0, "initial occupation number")
        ->each([&](const std::string&) { have_n0 = true; });
    app.add_option("--out", opts.out_dir, "output directory");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", opts.threads, "grid-map thread count")
        ->check(CLI::PositiveNumber);

    auto* fig = app.add_subcommand("figure", "emit a figure dataset");
    int fig_n = 1;
    fig->add_option("n", fig_n, "figure index 1..6")->required()->check(CLI::Range(1, 6));

    auto* table = app.add_subcommand("table-b1", "emit the laser table");

    auto* ver = app.add_subcommand("verify", "run the consistency matrix");
    std::string level = "quick";
    ver->add_option("level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    auto* jac = app.add_subcommand("jackiw", "dump a Jackiw state");
    double gamma = 1.0;
    int branch = 0, dim = 0;
    jac->add_option("--gamma", gamma, "gamma parameter")->check(CLI::PositiveNumber);
    jac->add_option("--branch", branch, "branch index s >= 0");
    jac->add_option("--dim", dim, "truncation dimension (0 = automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) apply_config_file(opts.config, config_path);
        if (have_intensity) opts.config.intensity_W_cm2 = intensity;
        if (have_energy) opts.config.photon_energy_eV = energy;
        if (have_lw) opts.config.lambda_over_w = lw;
        if (have_n0) opts.config.n0 = n0;
        opts.format = format == "csv" ? phel::cliops::Format::csv
                                      : phel::cliops::Format::json;
        opts.config.validate();

        std::vector<std::string> outputs;
        int rc = 0;
        std::string command;
        if (fig->parsed()) {
            command = "figure-" + std::to_string(fig_n);
            outputs = phel::cliops::cmd_figure(fig_n, opts);
        } else if (table->parsed()) {
            command = "table-b1";
            outputs = {phel::cliops::cmd_table_b1(opts)};
        } else if (ver->parsed()) {
            command = "verify-" + level;
            std::string report;
            rc = phel::cliops::cmd_verify(level, opts, &report);
            outputs = {report};
        } else if (jac->parsed()) {
            command = "jackiw";
            outputs = phel::cliops::cmd_jackiw(gamma, branch, dim, opts);
        }
        phel::cliops::write_manifest(command, opts, outputs, rc != 0);
        for (const auto& o : outputs) std::cout << o << "\n";
        return rc;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
