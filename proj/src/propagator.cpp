#include "dicke/propagator.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace dicke {

namespace {

// One Krylov approximation of exp(-i dt H) v for a normalized v already
// stored in basis[0].  Returns the reached error estimate; writes the result
// into `out` only when the estimate meets tol.
class LanczosWorkspace {
public:
    LanczosWorkspace(const SparseHamiltonian& h, int max_krylov)
        : h_(h), max_m_(max_krylov), basis_(static_cast<std::size_t>(max_krylov)),
          alpha_(max_krylov), beta_(max_krylov) {}

    StateVector& seed() {
        if (basis_[0].empty()) basis_[0].resize(static_cast<std::size_t>(h_.dim()));
        return basis_[0];
    }

    bool run(double dt, double tol, StateVector& out) {
        const std::size_t dim = static_cast<std::size_t>(h_.dim());
        w_.resize(dim);

        int m = 0;
        bool breakdown = false;
        while (m < max_m_ && !breakdown) {
            h_.apply(basis_[static_cast<std::size_t>(m)], w_);
            double a = 0.0;
            {
                const StateVector& vm = basis_[static_cast<std::size_t>(m)];
                for (std::size_t i = 0; i < dim; ++i) {
                    a += (std::conj(vm[i]) * w_[i]).real();
                }
            }
            alpha_[static_cast<std::size_t>(m)] = a;
            {
                const StateVector& vm = basis_[static_cast<std::size_t>(m)];
                for (std::size_t i = 0; i < dim; ++i) w_[i] -= a * vm[i];
            }
            if (m > 0) {
                const double b = beta_[static_cast<std::size_t>(m - 1)];
                const StateVector& vprev = basis_[static_cast<std::size_t>(m - 1)];
                for (std::size_t i = 0; i < dim; ++i) w_[i] -= b * vprev[i];
            }
            double b = 0.0;
            for (std::size_t i = 0; i < dim; ++i) b += std::norm(w_[i]);
            b = std::sqrt(b);
            beta_[static_cast<std::size_t>(m)] = b;
            ++m;

            breakdown = b <= 1e-14 * std::max(1.0, std::abs(a));
            const double err = breakdown ? 0.0 : error_estimate(m, dt, b);
            if (err <= tol || breakdown || m == max_m_) {
                if (err <= tol || breakdown) {
                    assemble(m, dt, out);
                    return true;
                }
                return false;
            }
            if (static_cast<std::size_t>(m) >= basis_.size()) return false;
            StateVector& next = basis_[static_cast<std::size_t>(m)];
            next.resize(dim);
            const double inv = 1.0 / b;
            for (std::size_t i = 0; i < dim; ++i) next[i] = w_[i] * inv;
        }
        return false;
    }

private:
    // u(dt) = exp(-i dt T_m) e1 via the tridiagonal eigendecomposition
    void solve_small(int m, double dt) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha_[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                t(i, i + 1) = beta_[static_cast<std::size_t>(i)];
                t(i + 1, i) = beta_[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const Eigen::VectorXd& ev = es.eigenvalues();
        const Eigen::MatrixXd& q = es.eigenvectors();
        u_.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) u_[static_cast<std::size_t>(i)] = Complex{0.0, 0.0};
        for (int k = 0; k < m; ++k) {
            const Complex phase = std::polar(1.0, -dt * ev(k)) * q(0, k);
            for (int i = 0; i < m; ++i) {
                u_[static_cast<std::size_t>(i)] += q(i, k) * phase;
            }
        }
    }

    double error_estimate(int m, double dt, double next_beta) {
        solve_small(m, dt);
        return next_beta * std::abs(u_[static_cast<std::size_t>(m - 1)]);
    }

    void assemble(int m, double dt, StateVector& out) {
        solve_small(m, dt);
        const std::size_t dim = static_cast<std::size_t>(h_.dim());
        out.assign(dim, Complex{0.0, 0.0});
        for (int k = 0; k < m; ++k) {
            const Complex c = u_[static_cast<std::size_t>(k)];
            const StateVector& vk = basis_[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < dim; ++i) out[i] += c * vk[i];
        }
    }

    const SparseHamiltonian& h_;
    int max_m_;
    std::vector<StateVector> basis_;
    std::vector<double> alpha_;
    std::vector<double> beta_;
    StateVector w_;
    std::vector<Complex> u_;
};

} // namespace

void ConservationMonitor::observe(const StateVector& psi) {
    report_.max_norm_drift = std::max(report_.max_norm_drift, std::abs(norm(psi) - 1.0));
    report_.max_odd_parity = std::max(report_.max_odd_parity, odd_parity_weight(spec_, psi));
    if (report_.excitation_tracked) {
        const double e = excitation_expectation(spec_, psi);
        if (first_) {
            initial_excitation_ = e;
            first_ = false;
        }
        report_.max_excitation_drift =
            std::max(report_.max_excitation_drift, std::abs(e - initial_excitation_));
    }
}

void propagate(const SparseHamiltonian& h, const StateVector& psi0, const TimeGrid& grid,
               const PropagationOptions& opt,
               const std::function<void(std::size_t, const StateVector&)>& observer) {
    if (static_cast<std::int64_t>(psi0.size()) != h.dim()) {
        throw InvalidParamsError("propagate: state/Hamiltonian dimension mismatch");
    }
    if (std::abs(norm(psi0) - 1.0) > 1e-9) {
        throw InvalidParamsError("propagate: initial state must be normalized");
    }

    StateVector psi = psi0;
    StateVector stage;
    LanczosWorkspace krylov(h, opt.max_krylov);
    observer(0, psi);

    for (std::size_t k = 1; k <= grid.steps; ++k) {
        int substeps = 1;
        for (;;) {
            bool ok = true;
            stage = psi;
            const double dt_sub = grid.dt / substeps;
            const double tol_sub = opt.tol / substeps;
            for (int s = 0; s < substeps; ++s) {
                StateVector& seed = krylov.seed();
                const double nrm = norm(stage);
                const double inv = 1.0 / nrm;
                seed.resize(stage.size());
                for (std::size_t i = 0; i < stage.size(); ++i) seed[i] = stage[i] * inv;
                StateVector result;
                if (!krylov.run(dt_sub, tol_sub, result)) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < result.size(); ++i) result[i] *= nrm;
                stage.swap(result);
            }
            if (ok) break;
            substeps *= 2;
            if (substeps > opt.max_substeps) {
                throw NonConvergenceError(
                    "propagate: local tolerance unreachable at max Krylov dimension");
            }
        }
        psi.swap(stage);
        const double drift = std::abs(norm(psi) - 1.0);
        if (drift > opt.norm_drift_limit) {
            throw NormDriftError("propagate: norm drift " + std::to_string(drift) +
                                 " exceeds limit");
        }
        observer(k, psi);
    }
}

std::vector<StateVector> propagate(const SparseHamiltonian& h, const StateVector& psi0,
                                   const TimeGrid& grid, const PropagationOptions& opt) {
    std::vector<StateVector> states;
    states.reserve(grid.size());
    propagate(h, psi0, grid, opt,
              [&](std::size_t, const StateVector& psi) { states.push_back(psi); });
    return states;
}

EchoSeries echo_series(const SparseHamiltonian& h, const StateVector& psi0, const TimeGrid& grid,
                       const PropagationOptions& opt, SeriesProvenance provenance,
                       ConservationMonitor* monitor) {
    EchoSeries series;
    series.grid = grid;
    series.provenance = provenance;
    series.values.resize(grid.size());
    series.valid.assign(grid.size(), 1);

    propagate(h, psi0, grid, opt, [&](std::size_t k, const StateVector& psi) {
        double L = std::norm(inner(psi0, psi));
        if (L < kEchoFloor) {
            L = kEchoFloor;
            series.valid[k] = 0;
        }
        series.values[k] = L;
        if (monitor != nullptr) monitor->observe(psi);
    });
    return series;
}

} // namespace dicke
