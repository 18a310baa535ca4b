// Shallow-water client: runs a dambreak scenario, writes the volume-error
// diagnostics CSV and optional height-field snapshots.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include <honei/io/height_field.hpp>
#include <honei/swe/solver.hpp>
#include <honei/swe/state.hpp>
#include <honei/util/runtime.hpp>

using namespace honei;

namespace {

swe::Scenario parse_scenario(const std::string& name) {
    if (name == "circular") return swe::Scenario::CircularDambreak;
    if (name == "partial") return swe::Scenario::PartialDambreak;
    if (name == "drybed") return swe::Scenario::DryBedDambreak;
    throw InvalidArgument("unknown scenario '" + name + "'");
}

swe::PrecisionConfig parse_precision(const std::string& name) {
    if (name == "single") return swe::PrecisionConfig::all_single();
    if (name == "double") return swe::PrecisionConfig::all_double();
    if (name == "prediction") return swe::PrecisionConfig::prediction_double();
    if (name.rfind("kth:", 0) == 0)
        return swe::PrecisionConfig::every_kth_double(std::stoul(name.substr(4)));
    throw InvalidArgument("unknown precision config '" + name +
                          "' (single | double | prediction | kth:<k>)");
}

std::string snapshot_name(const std::string& dir, std::size_t step, const char* extension) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "height_%06zu.%s", step, extension);
    return (std::filesystem::path(dir) / buf).string();
}

template <Real T>
int run(BackendTag tag, swe::Scenario scenario, std::size_t grid, std::size_t steps,
        const swe::PrecisionConfig& config, const std::string& out_dir,
        std::size_t snapshot_every, const std::string& snapshot_format, double dx, double dt) {
    swe::SweParams params;
    params.dx = dx;
    params.dy = dx;
    params.dt = dt;
    auto state = swe::make_scenario<T>(scenario, grid, params);
    std::printf("# grid=%zux%zu dx=%g dt=%g lambda=(%g, %g)\n", grid, grid, params.dx, params.dt,
                params.lambda_x, params.lambda_y);

    const auto format = snapshot_format == "pgm" ? io::FieldFormat::Pgm : io::FieldFormat::Csv;
    const auto extension = snapshot_format == "pgm" ? "pgm" : "csv";
    std::function<void(std::size_t, const swe::SweState<T>&)> snapshot;
    if (snapshot_every > 0 || steps == 0) {
        snapshot = [&](std::size_t step, const swe::SweState<T>& s) {
            const bool due = steps == 0 || (snapshot_every > 0 && step % snapshot_every == 0);
            if (due) io::write_height_field(s, snapshot_name(out_dir, step, extension), format);
        };
    }

    const auto rows = swe::run_simulation(tag, state, params, steps, config, snapshot);
    const auto diag_path = (std::filesystem::path(out_dir) / "volume_error.csv").string();
    io::write_diagnostics_csv(rows, diag_path);
    std::printf("# final rel_vol_err=%.6e (%s)\n", rows.back().rel_vol_err, diag_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit shallow-water dambreak simulation"};

    std::string scenario_name = "circular";
    std::size_t grid = 100;
    std::size_t steps = 500;
    std::string precision = "double";
    std::string backend;
    std::string out_dir = ".";
    std::size_t snapshot_every = 0;
    std::string snapshot_format = "csv";
    std::string config_path;
    double dx = 5.0;
    double dt = 0.0;

    app.add_option("--scenario", scenario_name, "circular | partial | drybed");
    app.add_option("--grid", grid, "cells per side (>= 16)");
    app.add_option("--steps", steps, "number of timesteps");
    app.add_option("--precision", precision, "single | double | prediction | kth:<k>");
    app.add_option("--backend", backend, "generic | blocked | parallel");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--snapshot-every", snapshot_every, "write a height field every N steps");
    app.add_option("--snapshot-format", snapshot_format, "csv | pgm")
        ->check(CLI::IsMember({"csv", "pgm"}));
    app.add_option("--dx", dx, "cell size in meters");
    app.add_option("--dt", dt, "timestep in seconds (0 = automatic)");
    app.add_option("--config", config_path, "runtime config file");

    CLI11_PARSE(app, argc, argv);

    try {
        auto& runtime = Runtime::instance();
        if (!config_path.empty())
            runtime.set_config(load_config(config_path));
        for (const auto& warning : runtime.config().warnings)
            std::fprintf(stderr, "warning: %s\n", warning.c_str());
        const BackendTag tag =
            backend.empty() ? runtime.config().default_backend : parse_backend_tag(backend);
        const auto scenario = parse_scenario(scenario_name);
        const auto config = parse_precision(precision);
        std::filesystem::create_directories(out_dir);

        if (config.mode == swe::PrecisionMode::AllDouble)
            return run<double>(tag, scenario, grid, steps, config, out_dir, snapshot_every,
                               snapshot_format, dx, dt);
        return run<float>(tag, scenario, grid, steps, config, out_dir, snapshot_every,
                          snapshot_format, dx, dt);
    } catch (const NonFiniteState& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
