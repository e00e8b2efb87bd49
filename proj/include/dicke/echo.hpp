// echo.hpp — closed-form Loschmidt echoes of the effective model and the
// observables (decay rate, frequency content) that label the phases.
//
// Per quasiparticle block the echo factor is
//   HO/AHO :  L_j(t) = 1 - [8 th² / (2 + th²)²] sin²(Omega_j t),  th = tanh(theta_j)
//   IHO    :  L_j(t) = 1 / cosh(Omega_j t)
// and the full echo is the product of the two factors of the region.  The
// oscillator factors are leading-order in the rotation parameter; the
// propagator benchmark in the test suite pins how close they track the
// numerically exact echo.

#pragma once

#include <cstdint>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

// Echo samples below this value are clamped and flagged invalid; cosh
// overflows double precision well before the clamp matters physically.
inline constexpr double kEchoFloor = 1e-300;

enum class SeriesProvenance { Analytic, EffectiveOracle, FiniteN };

const char* to_string(SeriesProvenance p);

struct TimeGrid {
    double dt = 0.01;
    std::size_t steps = 2000;  // samples at t_k = k*dt, k = 0..steps

    static TimeGrid span(double t_end, double dt);

    std::size_t size() const { return steps + 1; }
    double time(std::size_t k) const { return dt * static_cast<double>(k); }
    double t_end() const { return time(steps); }
};

struct EchoSeries {
    TimeGrid grid;
    std::vector<double> values;       // L(t_k) in [0, 1]
    std::vector<std::uint8_t> valid;  // 0 where the sample hit kEchoFloor
    SeriesProvenance provenance = SeriesProvenance::Analytic;

    std::size_t size() const { return values.size(); }
};

struct QuenchObservables {
    double lambda = 0.0;   // decay rate in units of omega, <= 0
    double f = 0.0;        // frequency sum in units of omega, >= 0
    double f1 = 0.0;       // faster component (0 when absent)
    double f2 = 0.0;       // slower component (0 when absent)
    double balance = 0.0;  // midpoint of the late-time log-derivative, units of omega
};

// Amplitude of the sin² modulation of an oscillator echo factor.
double echo_modulation_depth(double tanh_theta);

// Alternate coefficient written as 2A² with A = 2 th²/(2 + th²); kept for
// cross-checks only — the propagator benchmark selects echo_modulation_depth.
double echo_modulation_depth_alt(double tanh_theta);

// One echo factor.  Throws DegenerateFormError when omega_eff vanishes and
// InvalidParamsError for t < 0.
double mode_echo(const EquivalentHamiltonian& mode, double t);

// Product of the two region factors at a non-boundary point.
double full_echo(const ModelParams& params, double t);

// full_echo sampled on a uniform grid, clamped at kEchoFloor.
EchoSeries analytic_echo_series(const ModelParams& params, const TimeGrid& grid);

// D(t) = d/dt ln L on the series grid: central differences in the interior,
// one-sided at the ends.  Throws NonPositiveEchoError if any sample is
// invalid or not strictly positive.
std::vector<double> log_derivative(const EchoSeries& series);

// Longest prefix of the series with all samples valid.
EchoSeries truncate_to_valid(const EchoSeries& series);

// Region observables:
//   NP/SP1: lambda = 0,            f = (Omega1 + Omega2)/(pi omega)
//   SP2   : lambda = -Omega2/omega, f = Omega1/(pi omega), balance = lambda
//   SP3   : lambda = -(Omega1 + Omega2)/omega, f = 0
QuenchObservables analytic_observables(const ModelParams& params);

} // namespace dicke
