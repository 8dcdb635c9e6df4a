// Command-line front end: run a scenario (or a config file) and write CSV
// snapshots, or run a grid-refinement study against the analytic inflow wave.
#include "hemo/analytic.hpp"
#include "hemo/config.hpp"
#include "hemo/integrator.hpp"
#include "hemo/io.hpp"
#include "hemo/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// 0 = success, 2 = configuration error, 3 = numerical failure, 4 = I/O failure.
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;
constexpr int exit_io = 4;

hemo::SimulationConfig load_config(const std::string& scenario, const std::string& config_path,
                                   const std::vector<std::string>& overrides,
                                   bool drop_snapshots = false) {
    if (scenario.empty() == config_path.empty())
        throw hemo::ConfigError("pass exactly one of --scenario or --config");
    hemo::SimulationConfig cfg = scenario.empty() ? hemo::parse_config_file(config_path)
                                                  : hemo::scenario_config(scenario);
    hemo::apply_overrides(cfg, overrides);
    if (drop_snapshots)
        cfg.snapshot_times.clear();
    hemo::validate(cfg);
    return cfg;
}

int run_command(const std::string& scenario, const std::string& config_path,
                std::vector<std::string> overrides, const std::string& out_dir,
                const std::string& snapshots, bool analytic_reference) {
    if (!snapshots.empty())
        overrides.push_back("run.snapshots=" + snapshots);
    const hemo::SimulationConfig cfg = load_config(scenario, config_path, overrides);

    hemo::QReference reference;
    if (analytic_reference)
        reference = hemo::damped_wave_reference(cfg);

    const hemo::RunResult result = hemo::run(cfg);
    hemo::write_series(out_dir, result.series);

    const hemo::RunMetrics metrics =
        hemo::compute_metrics(result, analytic_reference ? &reference : nullptr, nullptr);
    const std::string mpath = out_dir + "/metrics.csv";
    std::ofstream mout(mpath);
    if (!mout)
        throw hemo::IoError("cannot open '" + mpath + "' for writing");
    hemo::write_metrics_csv(mout, metrics);
    if (!mout.good())
        throw hemo::IoError("write failed on '" + mpath + "'");

    std::cout << "wrote " << result.series.snapshots.size() << " snapshots to " << out_dir
              << " (" << result.steps << " steps, " << metrics.wall_time << " s)\n";
    return 0;
}

int converge_command(const std::string& scenario, const std::string& config_path,
                     const std::vector<std::string>& overrides, const std::string& grids_arg,
                     const std::string& out_dir) {
    // The study re-runs each grid to t_end only; preset snapshot times are
    // irrelevant here and must not constrain t_end overrides.
    hemo::SimulationConfig cfg =
        load_config(scenario, config_path, overrides, /*drop_snapshots=*/true);
    const hemo::QReference reference = hemo::damped_wave_reference(cfg);

    std::vector<int> grids;
    std::stringstream ss(grids_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            grids.push_back(std::stoi(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw hemo::ConfigError("--grids: cannot parse cell count '" + item + "'");
        }
    }

    const std::vector<hemo::ConvergenceRow> rows =
        hemo::convergence_study(cfg, grids, reference);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw hemo::IoError("cannot create output directory '" + out_dir + "': " + ec.message());
    const std::string cpath = out_dir + "/convergence.csv";
    std::ofstream out(cpath);
    if (!out)
        throw hemo::IoError("cannot open '" + cpath + "' for writing");
    out << hemo::format_convergence_csv(rows);
    if (!out.good())
        throw hemo::IoError("write failed on '" + cpath + "'");

    std::cout << hemo::format_convergence_csv(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hemoflow: finite-volume solver for pulse waves in elastic vessels"};
    app.require_subcommand(1);

    std::string scenario, config_path, out_dir, snapshots, grids;
    std::vector<std::string> overrides;
    bool analytic_reference = false;

    CLI::App* run_cmd = app.add_subcommand("run", "integrate a case and write CSV snapshots");
    run_cmd->add_option("--scenario", scenario, "built-in case: dead_man, stented, damped_wave");
    run_cmd->add_option("--config", config_path, "config file (key = value lines)");
    run_cmd->add_option("--set", overrides, "override a config key, e.g. --set cells=200");
    run_cmd->add_option("--out", out_dir, "output directory")->required();
    run_cmd->add_option("--snapshots", snapshots, "comma-separated snapshot times");
    run_cmd->add_flag("--reference", analytic_reference,
                      "compare Q against the damped inflow wave in metrics.csv");

    CLI::App* conv_cmd =
        app.add_subcommand("converge", "grid-refinement study against the damped inflow wave");
    conv_cmd->add_option("--scenario", scenario, "built-in case: dead_man, stented, damped_wave");
    conv_cmd->add_option("--config", config_path, "config file (key = value lines)");
    conv_cmd->add_option("--set", overrides, "override a config key");
    conv_cmd->add_option("--grids", grids, "comma-separated cell counts, e.g. 375,750,1500")
        ->required();
    conv_cmd->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try {
        if (run_cmd->parsed())
            return run_command(scenario, config_path, overrides, out_dir, snapshots,
                               analytic_reference);
        return converge_command(scenario, config_path, overrides, grids, out_dir);
    } catch (const hemo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const hemo::NonPhysicalError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const hemo::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    } catch (const hemo::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const hemo::AllDryError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
}
