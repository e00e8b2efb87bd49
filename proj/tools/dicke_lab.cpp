// dicke_lab — command-line front end: phase classification, echo traces,
// coupling-plane sweeps and observable extraction.
//
// Exit codes: 0 success, 2 invalid params, 3 boundary point, 4 numeric failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dicke/sweep.hpp"

namespace {

using namespace dicke;

int run_classify(double g1, double g2, double omega) {
    ModelParams p;
    p.omega = omega;
    p.omega0 = omega;
    p.g1 = g1;
    p.g2 = g2;

    const PhaseRegion region = classify_phase(p);
    if (region.is_boundary()) {
        std::printf("Boundary %s\n", region.boundary_detail.c_str());
        return static_cast<int>(ErrorCode::Boundary);
    }
    const auto [omega1, omega2] = effective_frequencies(p);
    const auto [h1, h2] = region_hamiltonians(p);
    std::printf("%s Omega1=%.6f Omega2=%.6f kinds=%s,%s\n", to_string(region.tag), omega1,
                omega2, to_string(h1.kind), to_string(h2.kind));
    return 0;
}

struct EchoArgs {
    std::string point;
    double g1 = 0.4, g2 = 0.4;
    double omega = 1.0, omega0 = 1.0;
    std::string engine = "analytic";
    std::string initial = "down";
    int n_atoms = 100, n_max = 140;
    double horizon = 20.0, dt = 0.01, tol = 1e-12;
    std::string out;
};

int run_echo(const EchoArgs& args) {
    ModelParams p;
    p.omega = args.omega;
    p.omega0 = args.omega0;
    p.g1 = args.g1;
    p.g2 = args.g2;
    p.n_atoms = args.n_atoms;
    if (!args.point.empty()) {
        const auto preset = preset_point(args.point);
        if (!preset) throw InvalidParamsError("unknown preset point '" + args.point + "'");
        p.g1 = preset->first;
        p.g2 = preset->second;
    }

    const Engine engine = engine_from_string(args.engine);
    const TimeGrid grid = TimeGrid::span(args.horizon, args.dt);
    PropagationOptions opt;
    opt.tol = args.tol;

    EchoCsv csv;
    csv.engine = args.engine;
    if (args.initial != "down" && args.initial != "up") {
        throw InvalidParamsError("--initial must be 'down' or 'up'");
    }
    if (args.initial == "up" && engine != Engine::Finite) {
        throw InvalidParamsError("--initial up requires engine=finite");
    }

    switch (engine) {
        case Engine::Analytic:
            csv.series = analytic_echo_series(p, grid);
            break;
        case Engine::Effective: {
            BasisSpec spec{p.n_atoms, args.n_max, 2};
            csv.series = echo_series(build_effective(p, spec), initial_two_mode_vacuum(spec),
                                     grid, opt, SeriesProvenance::EffectiveOracle);
            break;
        }
        case Engine::Finite: {
            BasisSpec spec{p.n_atoms, args.n_max, 1};
            const StateVector psi0 =
                args.initial == "up" ? initial_all_up(spec) : initial_all_down(spec);
            csv.series = echo_series(build_adm(p, spec), psi0, grid, opt,
                                     SeriesProvenance::FiniteN);
            // analytic overlay for the dashed-vs-solid comparison, when defined
            if (p.omega0 == p.omega) {
                try {
                    csv.reference = analytic_echo_series(p, grid);
                    csv.reference_log_derivative =
                        log_derivative(truncate_to_valid(*csv.reference));
                } catch (const Error&) {
                    csv.reference.reset();
                }
            }
            break;
        }
    }
    csv.log_derivative = log_derivative(truncate_to_valid(csv.series));
    write_echo_csv_file(csv, args.out);
    std::printf("wrote %s (%zu samples)\n", args.out.c_str(), csv.series.size());
    return 0;
}

int run_extract(const std::string& path, double omega) {
    const EchoSeries series = read_echo_csv_file(path);
    ExtractionOptions opt;
    opt.omega = omega;
    const ExtractionResult r = extract_observables(series, opt);
    std::printf("lambda=%.6f f=%.6f f1=%.6f f2=%.6f balance=%.6f t_valid=%.6f peaks=%d\n",
                r.obs.lambda, r.obs.f, r.obs.f1, r.obs.f2, r.obs.balance, r.t_valid, r.n_peaks);
    return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_override,
                  int workers_override) {
    SweepConfig cfg = parse_sweep_config_file(config_path);
    if (workers_override > 0) cfg.workers = workers_override;
    if (!out_override.empty()) cfg.output = out_override;
    if (cfg.output.empty()) {
        throw InvalidParamsError("sweep: no output path (config key 'output' or --out)");
    }
    const SweepResult result = run_sweep(cfg);
    write_sweep_csv_file(result, cfg.output);
    std::size_t failures = 0;
    for (const SweepRow& row : result.rows) {
        if (row.status.rfind("error", 0) == 0) ++failures;
    }
    std::printf("wrote %s (%zu points, %zu failed)\n", cfg.output.c_str(), result.rows.size(),
                failures);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase diagram and quench dynamics of the anisotropic Dicke model"};
    app.require_subcommand(1);

    double cg1 = 0.0, cg2 = 0.0, comega = 1.0;
    CLI::App* classify = app.add_subcommand("classify", "classify a coupling point");
    classify->add_option("g1", cg1, "rotating-wave coupling")->required();
    classify->add_option("g2", cg2, "counter-rotating coupling")->required();
    classify->add_option("--omega", comega, "field frequency (default 1)");

    EchoArgs echo;
    CLI::App* echo_cmd = app.add_subcommand("echo", "compute an echo trace and write CSV");
    echo_cmd->add_option("--point", echo.point, "preset point a|b|c|d");
    echo_cmd->add_option("--g1", echo.g1, "rotating-wave coupling");
    echo_cmd->add_option("--g2", echo.g2, "counter-rotating coupling");
    echo_cmd->add_option("--omega", echo.omega, "field frequency");
    echo_cmd->add_option("--omega0", echo.omega0, "atomic frequency (finite engine only)");
    echo_cmd->add_option("--engine", echo.engine, "analytic|effective|finite");
    echo_cmd->add_option("--initial", echo.initial, "down|up (finite engine)");
    echo_cmd->add_option("--n-atoms", echo.n_atoms, "atom count N");
    echo_cmd->add_option("--n-max", echo.n_max, "boson cutoff per mode");
    echo_cmd->add_option("--horizon", echo.horizon, "evolution time in 1/omega");
    echo_cmd->add_option("--dt", echo.dt, "grid spacing in 1/omega");
    echo_cmd->add_option("--tol", echo.tol, "propagation tolerance per step");
    echo_cmd->add_option("--out", echo.out, "output CSV path")->required();

    std::string extract_in;
    double extract_omega = 1.0;
    CLI::App* extract_cmd = app.add_subcommand("extract", "extract lambda/f from an echo CSV");
    extract_cmd->add_option("--in", extract_in, "echo CSV path")->required();
    extract_cmd->add_option("--omega", extract_omega, "field frequency");

    std::string sweep_config, sweep_out;
    int sweep_workers = 0;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a coupling-plane sweep");
    sweep_cmd->add_option("--config", sweep_config, "key=value config file")->required();
    sweep_cmd->add_option("--out", sweep_out, "override config output path");
    sweep_cmd->add_option("--workers", sweep_workers, "override worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(cg1, cg2, comega);
        if (echo_cmd->parsed()) return run_echo(echo);
        if (extract_cmd->parsed()) return run_extract(extract_in, extract_omega);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_config, sweep_out, sweep_workers);
    } catch (const dicke::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(dicke::ErrorCode::Numeric);
    }
    return 0;
}
