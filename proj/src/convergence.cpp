#include "dicke/convergence.hpp"

#include <algorithm>
#include <cmath>

namespace dicke {

namespace {

EchoSeries run_echo(const ModelParams& params, const BasisSpec& spec, const TimeGrid& grid,
                    const PropagationOptions& opt) {
    if (spec.mode_count == 2) {
        return echo_series(build_effective(params, spec), initial_two_mode_vacuum(spec), grid,
                           opt, SeriesProvenance::EffectiveOracle);
    }
    return echo_series(build_adm(params, spec), initial_all_down(spec), grid, opt,
                       SeriesProvenance::FiniteN);
}

// Largest grid time with |a - b| below tol on the whole prefix.
double agreement_horizon(const EchoSeries& a, const EchoSeries& b, double tol) {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < n && std::abs(a.values[k] - b.values[k]) < tol) ++k;
    return k == 0 ? 0.0 : a.grid.time(k - 1);
}

} // namespace

ConvergenceReport convergence_check(const ModelParams& params, const BasisSpec& spec,
                                    const TimeGrid& grid, const PropagationOptions& opt) {
    spec.validate();
    ConvergenceReport report;

    const EchoSeries base = run_echo(params, spec, grid, opt);
    BasisSpec doubled = spec;
    doubled.boson_cutoff = 2 * spec.boson_cutoff;
    const EchoSeries refined = run_echo(params, doubled, grid, opt);

    report.t_star = agreement_horizon(base, refined, kCutoffAgreementTol);
    for (std::size_t k = 0; k < std::min(base.size(), refined.size()); ++k) {
        report.cutoff_sup_diff =
            std::max(report.cutoff_sup_diff, std::abs(base.values[k] - refined.values[k]));
    }

    if (spec.mode_count == 1) {
        // Reduced-scale atom-number comparison; cutoff follows the n_max/N
        // ratio of the requested run.
        BasisSpec small = spec;
        small.n_atoms = std::min(spec.n_atoms, 24);
        const double ratio = static_cast<double>(spec.boson_cutoff) / spec.n_atoms;
        small.boson_cutoff = std::max(16, static_cast<int>(std::ceil(ratio * 2 * small.n_atoms)));
        BasisSpec large = small;
        large.n_atoms = 2 * small.n_atoms;

        const EchoSeries s_small = run_echo(params, small, grid, opt);
        const EchoSeries s_large = run_echo(params, large, grid, opt);
        report.t_star_atoms = agreement_horizon(s_small, s_large, kAtomsAgreementTol);
        report.atoms_checked = true;
    }
    return report;
}

EchoSeries mirror_run(const ModelParams& params, const BasisSpec& spec, const TimeGrid& grid,
                      const PropagationOptions& opt) {
    spec.validate();
    if (spec.mode_count != 1) {
        throw InvalidParamsError("mirror_run: full model only");
    }
    return echo_series(build_adm(params, spec), initial_all_up(spec), grid, opt,
                       SeriesProvenance::FiniteN);
}

} // namespace dicke
