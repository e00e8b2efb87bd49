#include "dicke/echo.hpp"

#include <cmath>

namespace dicke {

const char* to_string(SeriesProvenance p) {
    switch (p) {
        case SeriesProvenance::Analytic: return "analytic";
        case SeriesProvenance::EffectiveOracle: return "effective";
        case SeriesProvenance::FiniteN: return "finite";
    }
    return "?";
}

TimeGrid TimeGrid::span(double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end >= 0.0)) {
        throw InvalidParamsError("TimeGrid: need dt > 0 and t_end >= 0");
    }
    TimeGrid g;
    g.dt = dt;
    g.steps = static_cast<std::size_t>(std::llround(t_end / dt));
    return g;
}

double echo_modulation_depth(double tanh_theta) {
    const double t2 = tanh_theta * tanh_theta;
    const double d = 2.0 + t2;
    return 8.0 * t2 / (d * d);
}

double echo_modulation_depth_alt(double tanh_theta) {
    const double t2 = tanh_theta * tanh_theta;
    const double a = 2.0 * t2 / (2.0 + t2);
    return 2.0 * a * a;
}

double mode_echo(const EquivalentHamiltonian& mode, double t) {
    if (t < 0.0) {
        throw InvalidParamsError("mode_echo: t must be >= 0");
    }
    if (!(mode.omega_eff > 0.0)) {
        throw DegenerateFormError("mode_echo: omega_eff = 0 (boundary form)");
    }
    switch (mode.kind) {
        case OscillatorKind::HarmonicOscillator:
        case OscillatorKind::AntiHarmonicOscillator: {
            const double s = std::sin(mode.omega_eff * t);
            return 1.0 - echo_modulation_depth(mode.tanh_theta_canonical) * s * s;
        }
        case OscillatorKind::InvertedHarmonicOscillator: {
            const double x = mode.omega_eff * t;
            // 1/cosh without overflow for large arguments
            return 2.0 * std::exp(-x) / (1.0 + std::exp(-2.0 * x));
        }
    }
    return 1.0;
}

double full_echo(const ModelParams& params, double t) {
    const auto [h1, h2] = region_hamiltonians(params);
    return mode_echo(h1, t) * mode_echo(h2, t);
}

EchoSeries analytic_echo_series(const ModelParams& params, const TimeGrid& grid) {
    const auto [h1, h2] = region_hamiltonians(params);
    EchoSeries s;
    s.grid = grid;
    s.provenance = SeriesProvenance::Analytic;
    s.values.resize(grid.size());
    s.valid.assign(grid.size(), 1);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid.time(k);
        double v = mode_echo(h1, t) * mode_echo(h2, t);
        if (v < kEchoFloor) {
            v = kEchoFloor;
            s.valid[k] = 0;
        }
        s.values[k] = v;
    }
    return s;
}

std::vector<double> log_derivative(const EchoSeries& series) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw InvalidParamsError("log_derivative: need at least two samples");
    }
    std::vector<double> logs(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!series.valid[k] || !(series.values[k] > 0.0)) {
            throw NonPositiveEchoError("log_derivative: sample at or below the echo floor");
        }
        logs[k] = std::log(series.values[k]);
    }
    const double dt = series.grid.dt;
    std::vector<double> d(n);
    d[0] = (logs[1] - logs[0]) / dt;
    d[n - 1] = (logs[n - 1] - logs[n - 2]) / dt;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        d[k] = (logs[k + 1] - logs[k - 1]) / (2.0 * dt);
    }
    return d;
}

EchoSeries truncate_to_valid(const EchoSeries& series) {
    std::size_t n = 0;
    while (n < series.size() && series.valid[n]) ++n;
    EchoSeries out;
    out.grid.dt = series.grid.dt;
    out.grid.steps = n == 0 ? 0 : n - 1;
    out.values.assign(series.values.begin(), series.values.begin() + n);
    out.valid.assign(n, 1);
    out.provenance = series.provenance;
    return out;
}

QuenchObservables analytic_observables(const ModelParams& params) {
    const PhaseRegion region = classify_phase(params);
    if (region.is_boundary()) {
        throw OnBoundaryError("analytic_observables: point lies on a critical line (" +
                              region.boundary_detail + ")");
    }
    const auto [omega1, omega2] = effective_frequencies(params);
    const double w = params.omega;

    QuenchObservables obs;
    switch (region.tag) {
        case PhaseTag::NP:
        case PhaseTag::SP1:
            obs.f1 = omega1 / (M_PI * w);
            obs.f2 = omega2 / (M_PI * w);
            obs.f = obs.f1 + obs.f2;
            break;
        case PhaseTag::SP2:
            obs.f1 = omega1 / (M_PI * w);
            obs.f = obs.f1;
            obs.lambda = -omega2 / w;
            obs.balance = obs.lambda;
            break;
        case PhaseTag::SP3:
            obs.lambda = -(omega1 + omega2) / w;
            obs.balance = obs.lambda;
            break;
        case PhaseTag::Boundary:
            break;
    }
    return obs;
}

} // namespace dicke
