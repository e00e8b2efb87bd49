// propagator.hpp — short-iterative Lanczos propagation of |psi(t)> =
// exp(-iHt)|psi(0)> for Hermitian sparse H, streamed over a uniform grid.
//
// Each grid step is approximated in a Krylov subspace of adaptive dimension
// (<= max_krylov); if the local error target cannot be met the step is
// bisected internally.  A single propagation is strictly sequential —
// parallelism belongs across independent parameter points, never inside one
// run, so results are bit-reproducible regardless of thread count.

#pragma once

#include <functional>

#include "dicke/echo.hpp"
#include "dicke/hamiltonians.hpp"
#include "dicke/sparse.hpp"

namespace dicke {

struct PropagationOptions {
    double tol = 1e-12;            // local error budget per grid step
    int max_krylov = 64;
    double norm_drift_limit = 1e-8;
    int max_substeps = 4096;       // bisection limit before NonConvergenceError
};

// Tracked per grid point while a finite run streams by.
struct ConservationReport {
    double max_norm_drift = 0.0;
    double max_odd_parity = 0.0;
    double max_excitation_drift = 0.0;
    bool excitation_tracked = false;
};

class ConservationMonitor {
public:
    ConservationMonitor(const BasisSpec& spec, bool track_excitation)
        : spec_(spec) {
        report_.excitation_tracked = track_excitation;
    }

    void observe(const StateVector& psi);
    const ConservationReport& report() const { return report_; }

private:
    BasisSpec spec_;
    ConservationReport report_;
    bool first_ = true;
    double initial_excitation_ = 0.0;
};

// Streams psi(t_k) through `observer` for k = 0..steps.  psi0 must be
// normalized.  Throws NonConvergenceError / NormDriftError.
void propagate(const SparseHamiltonian& h, const StateVector& psi0, const TimeGrid& grid,
               const PropagationOptions& opt,
               const std::function<void(std::size_t, const StateVector&)>& observer);

// Convenience for small problems: all grid states, including t = 0.
std::vector<StateVector> propagate(const SparseHamiltonian& h, const StateVector& psi0,
                                   const TimeGrid& grid, const PropagationOptions& opt = {});

// L(t_k) = |<psi0|psi(t_k)>|² with the echo-floor clamp of EchoSeries.
EchoSeries echo_series(const SparseHamiltonian& h, const StateVector& psi0, const TimeGrid& grid,
                       const PropagationOptions& opt, SeriesProvenance provenance,
                       ConservationMonitor* monitor = nullptr);

} // namespace dicke
