#include "phel/cli_ops.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "phel/density.hpp"
#include "phel/entangled.hpp"
#include "phel/phase.hpp"
#include "phel/verify.hpp"

namespace phel::cliops {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string out_path(const RunOptions& opts, const std::string& stem) {
    fs::create_directories(opts.out_dir);
    std::string ext = opts.format == Format::csv ? ".csv" : ".json";
    return (fs::path(opts.out_dir) / (stem + ext)).string();
}

void write_rows(const RunOptions& opts, const std::string& path,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    if (opts.format == Format::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            f << (i ? "," : "") << columns[i];
        f << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                f << (i ? "," : "") << fmt(r[i]);
            f << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json o;
            for (std::size_t i = 0; i < r.size(); ++i) o[columns[i]] = r[i];
            arr.push_back(o);
        }
        f << arr.dump(2) << "\n";
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[std::size_t(i)] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<std::string> figure1(const RunOptions& opts) {
    const double drive = 2.0;
    auto xs = linspace(0.0, 8.0, 161);
    auto ts = linspace(0.0, 8.0, 161);
    std::vector<std::string> files;
    for (int k : {0, 1, 5, 25}) {
        auto grid = entangled::joint_probability_grid(k, xs, ts, drive, opts.threads);
        std::vector<std::vector<double>> rows;
        rows.reserve(xs.size() * ts.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ts.size(); ++j)
                rows.push_back({xs[i], ts[j], double(k), grid[i * ts.size() + j]});
        std::string p = out_path(opts, "fig1_k" + std::to_string(k));
        write_rows(opts, p, {"x", "theta", "k", "probability"}, rows);
        files.push_back(p);
    }
    return files;
}

std::vector<std::string> figure2(const RunOptions& opts) {
    const double drive = 4.0, x = 10.0;
    std::vector<std::string> files;
    for (double s : {0.3, 0.6, 1.0, 1.5}) {
        std::vector<std::vector<double>> rows;
        for (int k = 0; k <= 80; ++k) {
            entangled::DetectionPoint p{x, 0.0, s * x};
            rows.push_back(
                {double(k),
                 std::norm(entangled::joint_amplitude_asymptotic(k, p, drive).value)});
        }
        char stem[32];
        std::snprintf(stem, sizeof stem, "fig2_s%.1f", s);
        std::string p = out_path(opts, stem);
        write_rows(opts, p, {"k", "probability"}, rows);
        files.push_back(p);
    }
    return files;
}

std::vector<std::string> figure3(const RunOptions& opts) {
    const double drive = 4.0;
    std::vector<std::vector<double>> rows;
    for (double x : linspace(0.5, 12.0, 47))
        for (double t : linspace(0.0, 12.0, 49)) {
            std::vector<double> prof;
            prof.reserve(81);
            for (int k = 0; k <= 80; ++k) {
                entangled::DetectionPoint p{x, 0.0, t};
                prof.push_back(
                    std::norm(entangled::joint_amplitude_asymptotic(k, p, drive).value));
            }
            double region =
                entangled::classify_shape(prof) == entangled::Shape::oscillatory ? 1.0
                                                                                 : 0.0;
            rows.push_back({x, t, region});
        }
    std::string p = out_path(opts, "fig3_regions");
    write_rows(opts, p, {"x", "theta", "oscillatory"}, rows);
    return {p};
}

std::vector<std::string> figure4(const RunOptions& opts) {
    std::vector<std::string> files;
    for (double q : {2.5, 5.0, 25.0, 50.0}) {
        auto d = density::photon_dist_asymptotic(q);
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < d.weights.size(); ++i)
            rows.push_back({double(d.k_min + int(i)), d.weights[i]});
        char stem[32];
        std::snprintf(stem, sizeof stem, "fig4_q%g", q);
        std::string p = out_path(opts, stem);
        write_rows(opts, p, {"k", "p_k"}, rows);
        files.push_back(p);
    }
    return files;
}

std::vector<std::string> figure56(const RunOptions& opts, bool with_linear) {
    std::vector<std::vector<double>> rows;
    rows.push_back(with_linear ? std::vector<double>{0.0, 0.0, 0.0}
                               : std::vector<double>{0.0, 0.0});
    for (double li = 9.0; li <= 14.0 + 1e-9; li += 0.0625) {
        double intensity = std::pow(10.0, li);
        double q = 2e-12 * intensity;
        double s = density::von_neumann_photon(q);
        if (with_linear)
            rows.push_back({intensity, s, density::linear_entropy_photon(q)});
        else
            rows.push_back({intensity, s});
    }
    std::string p = out_path(opts, with_linear ? "fig6_entropies" : "fig5_entropy");
    if (with_linear)
        write_rows(opts, p, {"intensity_W_cm2", "von_neumann", "linear"}, rows);
    else
        write_rows(opts, p, {"intensity_W_cm2", "von_neumann"}, rows);
    return {p};
}

} // namespace

std::vector<std::string> cmd_figure(int n, const RunOptions& opts) {
    switch (n) {
        case 1: return figure1(opts);
        case 2: return figure2(opts);
        case 3: return figure3(opts);
        case 4: return figure4(opts);
        case 5: return figure56(opts, false);
        case 6: return figure56(opts, true);
        default: throw std::invalid_argument("figure index must be 1..6");
    }
}

std::string cmd_table_b1(const RunOptions& opts) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : params::kTableB1) {
        params::PhysicalConfig cfg;
        cfg.photon_energy_eV = row.photon_energy_eV;
        cfg.bandwidth_ratio = row.bandwidth_ratio;
        cfg.intensity_W_cm2 = 1.0;
        rows.push_back({row.photon_energy_eV, row.bandwidth_ratio,
                        params::mean_occupation(cfg)});
    }
    std::string p = out_path(opts, "table_b1");
    // laser names carried in a separate column is awkward for the numeric
    // writer; emit CSV/JSON by hand here
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p);
    if (opts.format == Format::csv) {
        f << "laser,photon_energy_eV,bandwidth_ratio,nbar_coefficient\n";
        for (std::size_t i = 0; i < 3; ++i)
            f << params::kTableB1[i].name << "," << fmt(rows[i][0]) << ","
              << fmt(rows[i][1]) << "," << fmt(rows[i][2]) << "\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < 3; ++i)
            arr.push_back({{"laser", params::kTableB1[i].name},
                           {"photon_energy_eV", rows[i][0]},
                           {"bandwidth_ratio", rows[i][1]},
                           {"nbar_coefficient", rows[i][2]}});
        f << arr.dump(2) << "\n";
    }
    return p;
}

int cmd_verify(const std::string& level, const RunOptions& opts,
               std::string* report_path) {
    std::vector<verify::Check> checks;
    if (level == "quick")
        checks = verify::run_quick();
    else if (level == "full")
        checks = verify::run_full();
    else
        throw std::invalid_argument("verify level must be quick or full");
    fs::create_directories(opts.out_dir);
    std::string p = (fs::path(opts.out_dir) / ("verify_" + level + ".json")).string();
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p);
    f << verify::to_json(checks) << "\n";
    if (report_path) *report_path = p;
    return verify::all_pass(checks) ? 0 : 1;
}

std::vector<std::string> cmd_jackiw(double gamma, int branch, int dim,
                                    const RunOptions& opts) {
    auto [state, jp] = phase::jackiw_state(gamma, branch, dim);
    std::vector<std::vector<double>> rows;
    for (int n = 0; n < state.dim(); ++n)
        rows.push_back({double(n), state.coefficients(n).real(),
                        state.coefficients(n).imag()});
    std::string p = out_path(opts, "jackiw_state");
    write_rows(opts, p, {"n", "re", "im"}, rows);

    double res = 0.0;
    const auto& a = state.coefficients;
    for (int n = 0; n + 1 < state.dim(); ++n) {
        std::complex<double> prev = n == 0 ? std::complex<double>(0.0)
                                           : std::complex<double>(a(n - 1));
        res = std::max(res, std::abs((jp.nu - double(n)) * a(n) -
                                     std::complex<double>(0.0, gamma / 2.0) *
                                         (prev + a(n + 1))));
    }
    auto ops = phase::build_operators(state.dim());
    nlohmann::json summary{{"gamma", jp.gamma},
                           {"nu", jp.nu},
                           {"branch", jp.branch},
                           {"u1", phase::uncertainty_u1(state)},
                           {"mean_n", phase::expectation(ops.N, state).real()},
                           {"recursion_residual", res}};
    std::string sp = (fs::path(opts.out_dir) / "jackiw_summary.json").string();
    std::ofstream f(sp);
    f << summary.dump(2) << "\n";
    return {p, sp};
}

void write_manifest(const std::string& command, const RunOptions& opts,
                    const std::vector<std::string>& outputs, bool failed) {
    fs::create_directories(opts.out_dir);
    const auto& c = opts.config;
    auto d = params::derive(c);
    nlohmann::json j{
        {"command", command},
        {"config",
         {{"photon_energy_eV", c.photon_energy_eV},
          {"intensity_W_cm2", c.intensity_W_cm2},
          {"packet_width_cm", c.packet_width_cm},
          {"lambda_over_w", c.lambda_over_w},
          {"n0", c.n0},
          {"plasma_ratio", c.plasma_ratio},
          {"bandwidth_ratio", c.bandwidth_ratio}}},
        {"derived",
         {{"mu", d.mu},
          {"Lambda_over_w", d.Lambda_over_w},
          {"drive", d.drive},
          {"q", d.q},
          {"b", d.b},
          {"mass_ratio", d.mass_ratio},
          {"omega_tau0", d.omega_tau0},
          {"tau_ratio", d.tau_ratio}}},
        {"outputs", outputs},
        {"tool_version", kToolVersion},
        {"timestamp",
         std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
             .count()},
        {"failed", failed}};
    std::ofstream f((fs::path(opts.out_dir) / "manifest.json").string());
    f << j.dump(2) << "\n";
}

} // namespace phel::cliops
