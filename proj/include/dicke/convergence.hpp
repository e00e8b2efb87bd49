// convergence.hpp — validity horizon of a truncated finite run, and the
// quench from the all-excited initial state.

#pragma once

#include "dicke/propagator.hpp"

namespace dicke {

struct ConvergenceReport {
    // Horizon of the boson-cutoff doubling test at 1e-6 sup-norm on L; this
    // is the validity window used by extraction.
    double t_star = 0.0;
    // Full model only: horizon of an N vs 2N comparison at reduced scale.
    // Finite-size corrections to L are O(t/N), so this comparison carries a
    // looser 1e-2 threshold and is reported as a diagnostic, not folded into
    // t_star.
    double t_star_atoms = 0.0;
    bool atoms_checked = false;

    double cutoff_sup_diff = 0.0;  // sup |ΔL| over the whole grid for the cutoff test
};

inline constexpr double kCutoffAgreementTol = 1e-6;
inline constexpr double kAtomsAgreementTol = 1e-2;

// Largest grid time T such that doubling boson_cutoff changes L on [0, T] by
// less than kCutoffAgreementTol in sup-norm (grid end when never exceeded,
// 0 when immediately divergent).
ConvergenceReport convergence_check(const ModelParams& params, const BasisSpec& spec,
                                    const TimeGrid& grid, const PropagationOptions& opt = {});

// Echo of the full model from |⇑>|0> instead of |⇓>|0>.
EchoSeries mirror_run(const ModelParams& params, const BasisSpec& spec, const TimeGrid& grid,
                      const PropagationOptions& opt = {});

} // namespace dicke
