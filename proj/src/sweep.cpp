#include "dicke/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace dicke {

const char* to_string(Engine e) {
    switch (e) {
        case Engine::Analytic: return "analytic";
        case Engine::Effective: return "effective";
        case Engine::Finite: return "finite";
    }
    return "?";
}

Engine engine_from_string(const std::string& name) {
    if (name == "analytic") return Engine::Analytic;
    if (name == "effective") return Engine::Effective;
    if (name == "finite") return Engine::Finite;
    throw InvalidParamsError("unknown engine '" + name + "'");
}

void SweepConfig::validate() const {
    if (!(g1_step > 0.0) || !(g2_step > 0.0)) {
        throw InvalidParamsError("sweep config: steps must be positive");
    }
    if (g1_min < 0.0 || g2_min < 0.0 || g1_max < g1_min || g2_max < g2_min) {
        throw InvalidParamsError("sweep config: ranges must lie in the first quadrant");
    }
    if (!(omega > 0.0)) {
        throw InvalidParamsError("sweep config: omega must be positive");
    }
    if (!(horizon > 0.0) || !(dt > 0.0)) {
        throw InvalidParamsError("sweep config: horizon and dt must be positive");
    }
    if (workers < 1) {
        throw InvalidParamsError("sweep config: workers must be >= 1");
    }
    if (engine != Engine::Analytic) {
        if (n_max < 1) throw InvalidParamsError("sweep config: n_max must be >= 1");
        if (engine == Engine::Finite && n_atoms < 1) {
            throw InvalidParamsError("sweep config: n_atoms must be >= 1");
        }
    }
    if (engine != Engine::Finite && omega0 != omega) {
        throw InvalidParamsError("sweep config: omega0 != omega requires engine=finite");
    }
}

int SweepConfig::g1_points() const {
    return static_cast<int>(std::llround((g1_max - g1_min) / g1_step)) + 1;
}

int SweepConfig::g2_points() const {
    return static_cast<int>(std::llround((g2_max - g2_min) / g2_step)) + 1;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string{};
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::map<std::string, std::string> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string{};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidParamsError("sweep config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        raw[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }

    const auto take = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = raw.find(key);
        if (it == raw.end()) return std::nullopt;
        std::string v = it->second;
        raw.erase(it);
        return v;
    };
    const auto num = [&](const std::string& key, double& field) {
        if (const auto v = take(key)) {
            std::size_t used = 0;
            field = std::stod(*v, &used);
            if (used != v->size()) {
                throw InvalidParamsError("sweep config: bad number for " + key);
            }
        }
    };
    const auto integer = [&](const std::string& key, int& field) {
        if (const auto v = take(key)) {
            std::size_t used = 0;
            field = std::stoi(*v, &used);
            if (used != v->size()) {
                throw InvalidParamsError("sweep config: bad integer for " + key);
            }
        }
    };

    num("g1_min", cfg.g1_min);
    num("g1_max", cfg.g1_max);
    num("g1_step", cfg.g1_step);
    num("g2_min", cfg.g2_min);
    num("g2_max", cfg.g2_max);
    num("g2_step", cfg.g2_step);
    num("omega", cfg.omega);
    cfg.omega0 = cfg.omega;
    num("omega0", cfg.omega0);
    integer("n_atoms", cfg.n_atoms);
    integer("n_max", cfg.n_max);
    num("horizon", cfg.horizon);
    num("dt", cfg.dt);
    num("tol", cfg.tol);
    if (const auto v = take("engine")) cfg.engine = engine_from_string(*v);
    if (const auto v = take("check_convergence")) {
        if (*v == "true" || *v == "1") {
            cfg.check_convergence = true;
        } else if (*v == "false" || *v == "0") {
            cfg.check_convergence = false;
        } else {
            throw InvalidParamsError("sweep config: check_convergence must be true/false");
        }
    }
    integer("workers", cfg.workers);
    if (const auto v = take("output")) cfg.output = *v;

    if (!raw.empty()) {
        throw InvalidParamsError("sweep config: unknown key '" + raw.begin()->first + "'");
    }
    cfg.validate();
    return cfg;
}

SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParamsError("cannot open config file " + path);
    return parse_sweep_config(in);
}

std::string emit_sweep_config(const SweepConfig& cfg) {
    std::ostringstream out;
    out << "g1_min = " << fmt(cfg.g1_min) << "\n"
        << "g1_max = " << fmt(cfg.g1_max) << "\n"
        << "g1_step = " << fmt(cfg.g1_step) << "\n"
        << "g2_min = " << fmt(cfg.g2_min) << "\n"
        << "g2_max = " << fmt(cfg.g2_max) << "\n"
        << "g2_step = " << fmt(cfg.g2_step) << "\n"
        << "omega = " << fmt(cfg.omega) << "\n"
        << "omega0 = " << fmt(cfg.omega0) << "\n"
        << "n_atoms = " << cfg.n_atoms << "\n"
        << "n_max = " << cfg.n_max << "\n"
        << "horizon = " << fmt(cfg.horizon) << "\n"
        << "dt = " << fmt(cfg.dt) << "\n"
        << "tol = " << fmt(cfg.tol) << "\n"
        << "engine = " << to_string(cfg.engine) << "\n"
        << "check_convergence = " << (cfg.check_convergence ? "true" : "false") << "\n"
        << "workers = " << cfg.workers << "\n";
    if (!cfg.output.empty()) out << "output = " << cfg.output << "\n";
    return out.str();
}

namespace {

// Slice a series to [0, t_star]; extraction then sees only the validity window.
EchoSeries slice_series(const EchoSeries& s, double t_star) {
    const std::size_t steps =
        std::min<std::size_t>(s.grid.steps, static_cast<std::size_t>(std::floor(
                                                t_star / s.grid.dt + 1e-9)));
    EchoSeries out;
    out.grid.dt = s.grid.dt;
    out.grid.steps = steps;
    out.values.assign(s.values.begin(), s.values.begin() + steps + 1);
    out.valid.assign(s.valid.begin(), s.valid.begin() + steps + 1);
    out.provenance = s.provenance;
    return out;
}

SweepRow evaluate_point(const SweepConfig& cfg, double g1, double g2) {
    SweepRow row;
    row.g1 = g1;
    row.g2 = g2;

    ModelParams p;
    p.omega = cfg.omega;
    p.omega0 = cfg.omega0;
    p.g1 = g1;
    p.g2 = g2;
    p.n_atoms = cfg.engine == Engine::Finite ? cfg.n_atoms : 1;

    try {
        if (cfg.omega0 == cfg.omega) {
            const PhaseRegion region = classify_phase(p);
            row.region = to_string(region.tag);
            if (region.is_boundary()) {
                row.status = "boundary";
                return row;
            }
        } else {
            row.region = "-";
        }

        if (cfg.engine == Engine::Analytic) {
            const QuenchObservables obs = analytic_observables(p);
            row.lambda = obs.lambda;
            row.f = obs.f;
            row.f1 = obs.f1;
            row.f2 = obs.f2;
            row.t_star = cfg.horizon;
            row.status = "ok";
            return row;
        }

        const TimeGrid grid = TimeGrid::span(cfg.horizon, cfg.dt);
        PropagationOptions opt;
        opt.tol = cfg.tol;

        BasisSpec spec;
        spec.boson_cutoff = cfg.n_max;
        spec.mode_count = cfg.engine == Engine::Effective ? 2 : 1;
        spec.n_atoms = cfg.n_atoms;

        double t_star = cfg.horizon;
        if (cfg.check_convergence) {
            t_star = convergence_check(p, spec, grid, opt).t_star;
        }

        EchoSeries series;
        if (cfg.engine == Engine::Effective) {
            series = echo_series(build_effective(p, spec), initial_two_mode_vacuum(spec), grid,
                                 opt, SeriesProvenance::EffectiveOracle);
        } else {
            series = echo_series(build_adm(p, spec), initial_all_down(spec), grid, opt,
                                 SeriesProvenance::FiniteN);
        }

        ExtractionOptions ex;
        ex.omega = cfg.omega;
        const ExtractionResult r = extract_observables(slice_series(series, t_star), ex);
        row.lambda = r.obs.lambda;
        row.f = r.obs.f;
        row.f1 = r.obs.f1;
        row.f2 = r.obs.f2;
        row.t_star = t_star;
        row.status = "ok";
    } catch (const Error& e) {
        row.status = std::string{"error: "} + e.what();
    }
    return row;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    const int n1 = config.g1_points();
    const int n2 = config.g2_points();
    const std::size_t total = static_cast<std::size_t>(n1) * n2;

    SweepResult result;
    result.config = config;
    result.rows.resize(total);

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const int i = static_cast<int>(idx) / n2;
            const int j = static_cast<int>(idx) % n2;
            result.rows[idx] = evaluate_point(config, config.g1_at(i), config.g2_at(j));
        }
    };

    if (config.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(config.workers));
        for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    out << kCsvVersionLine << "\n";
    out << "# kind=sweep engine=" << to_string(result.config.engine)
        << " omega=" << fmt(result.config.omega) << " horizon=" << fmt(result.config.horizon)
        << " dt=" << fmt(result.config.dt) << "\n";
    out << "g1,g2,region,lambda,f,f1,f2,tstar,engine,status\n";
    for (const SweepRow& r : result.rows) {
        out << fmt(r.g1) << ',' << fmt(r.g2) << ',' << r.region << ',' << fmt_opt(r.lambda)
            << ',' << fmt_opt(r.f) << ',' << fmt_opt(r.f1) << ',' << fmt_opt(r.f2) << ','
            << fmt_opt(r.t_star) << ',' << to_string(result.config.engine) << ',' << r.status
            << "\n";
    }
}

namespace {

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidParamsError("cannot open output file " + tmp.string());
        out << content;
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw NonConvergenceError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InvalidParamsError("cannot move output into place at " + path);
    }
}

} // namespace

void write_sweep_csv_file(const SweepResult& result, const std::string& path) {
    std::ostringstream buffer;
    write_sweep_csv(result, buffer);
    atomic_write(path, buffer.str());
}

std::optional<std::pair<double, double>> preset_point(const std::string& name) {
    if (name == "a") return std::make_pair(0.4, 0.4);
    if (name == "b") return std::make_pair(1.6, 0.4);
    if (name == "c") return std::make_pair(1.2, 0.8);
    if (name == "d") return std::make_pair(0.4, 1.6);
    return std::nullopt;
}

void write_echo_csv(const EchoCsv& data, std::ostream& out) {
    const bool overlay = data.reference.has_value();
    out << kCsvVersionLine << "\n";
    out << "# kind=echo engine=" << data.engine << "\n";
    out << (overlay ? "t,L,D,valid,L_ref,D_ref\n" : "t,L,D,valid\n");
    for (std::size_t k = 0; k < data.series.size(); ++k) {
        out << fmt(data.series.grid.time(k)) << ',' << fmt(data.series.values[k]) << ','
            << (k < data.log_derivative.size() ? fmt(data.log_derivative[k]) : std::string{})
            << ',' << int(data.series.valid[k]);
        if (overlay) {
            out << ',' << fmt(data.reference->values[k]) << ','
                << (k < data.reference_log_derivative.size()
                        ? fmt(data.reference_log_derivative[k])
                        : std::string{});
        }
        out << "\n";
    }
}

void write_echo_csv_file(const EchoCsv& data, const std::string& path) {
    std::ostringstream buffer;
    write_echo_csv(data, buffer);
    atomic_write(path, buffer.str());
}

EchoSeries read_echo_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedCsvError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind("# dicke-phase-lab", 0) != 0) {
        throw MalformedCsvError(path + ": missing version header");
    }
    while (std::getline(in, line) && !line.empty() && line[0] == '#') {
    }
    if (line.rfind("t,L,D,valid", 0) != 0) {
        throw MalformedCsvError(path + ": unexpected column header '" + line + "'");
    }

    std::vector<double> times, values;
    std::vector<std::uint8_t> valid;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 4) throw MalformedCsvError(path + ": short row '" + line + "'");
        try {
            times.push_back(std::stod(cells[0]));
            values.push_back(std::stod(cells[1]));
            valid.push_back(static_cast<std::uint8_t>(std::stoi(cells[3]) != 0));
        } catch (const std::exception&) {
            throw MalformedCsvError(path + ": bad cell in row '" + line + "'");
        }
    }
    if (times.size() < 2) throw MalformedCsvError(path + ": too few rows");

    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw MalformedCsvError(path + ": non-increasing time column");
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * std::max(1.0, dt)) {
            throw MalformedCsvError(path + ": non-uniform time grid");
        }
    }

    EchoSeries s;
    s.grid.dt = dt;
    s.grid.steps = times.size() - 1;
    s.values = std::move(values);
    s.valid = std::move(valid);
    s.provenance = SeriesProvenance::FiniteN;
    return s;
}

} // namespace dicke
