// sweep.hpp — coupling-plane sweeps and the CSV/config surface of the CLI.
//
// CSV files open with the version comment `# dicke-phase-lab v1`.  Sweep rows
// are emitted in row-major grid order (g1 outer, g2 inner) and are
// byte-identical regardless of the worker count.  Times and rates are in
// units of 1/omega and omega throughout.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicke/convergence.hpp"
#include "dicke/extract.hpp"

namespace dicke {

inline constexpr const char* kCsvVersionLine = "# dicke-phase-lab v1";

enum class Engine { Analytic, Effective, Finite };

const char* to_string(Engine e);
Engine engine_from_string(const std::string& name);

// Key-value config accepted by `sweep`; unknown keys are rejected.
struct SweepConfig {
    double g1_min = 0.0, g1_max = 2.0, g1_step = 0.0125;
    double g2_min = 0.0, g2_max = 2.0, g2_step = 0.0125;
    double omega = 1.0;
    double omega0 = 1.0;
    int n_atoms = 100;
    int n_max = 140;
    double horizon = 20.0;
    double dt = 0.01;
    double tol = 1e-12;
    Engine engine = Engine::Analytic;
    bool check_convergence = false;
    int workers = 1;
    std::string output;

    void validate() const;
    int g1_points() const;
    int g2_points() const;
    double g1_at(int i) const { return g1_min + i * g1_step; }
    double g2_at(int j) const { return g2_min + j * g2_step; }

    bool operator==(const SweepConfig&) const = default;
};

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_file(const std::string& path);
std::string emit_sweep_config(const SweepConfig& config);

struct SweepRow {
    double g1 = 0.0;
    double g2 = 0.0;
    std::string region;
    std::optional<double> lambda, f, f1, f2, t_star;
    std::string status;  // "ok", "boundary", or "error: ..."
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;  // row-major over the grid
};

// Evaluates every grid point with the configured engine, parallel across
// points; per-point failures land in the status column and the run continues.
SweepResult run_sweep(const SweepConfig& config);

void write_sweep_csv(const SweepResult& result, std::ostream& out);
// Atomic write: temp file in the target directory, renamed on success.
void write_sweep_csv_file(const SweepResult& result, const std::string& path);

// Named coupling points used throughout: a(0.4,0.4) NP, b(1.6,0.4) SP1,
// c(1.2,0.8) SP2, d(0.4,1.6) SP3.
std::optional<std::pair<double, double>> preset_point(const std::string& name);

// Echo CSV: columns t,L,D,valid plus L_ref,D_ref overlay columns when an
// analytic reference accompanies a finite-engine run.
struct EchoCsv {
    EchoSeries series;
    std::vector<double> log_derivative;
    std::optional<EchoSeries> reference;
    std::vector<double> reference_log_derivative;
    std::string engine;
};

void write_echo_csv(const EchoCsv& data, std::ostream& out);
void write_echo_csv_file(const EchoCsv& data, const std::string& path);

// Parses a file produced by write_echo_csv; throws MalformedCsvError.
EchoSeries read_echo_csv_file(const std::string& path);

} // namespace dicke
