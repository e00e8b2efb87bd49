#include "dicke/bogoliubov.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace dicke {

bool QuadraticForm::degenerate() const {
    const double am = std::abs(mu);
    const double ad = std::abs(delta);
    return std::abs(am - ad) <= kBoundaryTol * std::max(am, ad);
}

const char* to_string(NormalFormKind kind) {
    switch (kind) {
        case NormalFormKind::HO: return "HO";
        case NormalFormKind::AHO: return "AHO";
        case NormalFormKind::IHO: return "IHO";
        case NormalFormKind::Degenerate: return "Degenerate";
    }
    return "?";
}

NormalForm diagonalize(const QuadraticForm& q) {
    if (!std::isfinite(q.mu) || !std::isfinite(q.delta)) {
        throw InvalidParamsError("diagonalize: non-finite quadratic form");
    }
    if (q.degenerate()) {
        throw DegenerateFormError("diagonalize: |mu| = |delta|, exceptional point of the form");
    }

    const double am = std::abs(q.mu);
    const double ad = std::abs(q.delta);

    NormalForm nf;
    nf.offset = -q.mu / 2.0;
    if (am > ad) {
        nf.kind = q.mu > 0 ? NormalFormKind::HO : NormalFormKind::AHO;
        nf.sign = q.mu > 0 ? 1 : -1;
        // (am - ad)(am + ad) keeps precision near the degeneracy
        nf.omega_eff = std::sqrt((am - ad) * (am + ad));
        nf.tanh_theta = q.delta == 0.0
                            ? 0.0
                            : (q.mu - nf.sign * nf.omega_eff) / q.delta;
    } else {
        nf.kind = NormalFormKind::IHO;
        nf.sign = q.delta > 0 ? 1 : -1;
        nf.omega_eff = std::sqrt((ad - am) * (ad + am));
        nf.tanh_theta = q.mu == 0.0
                            ? 0.0
                            : (q.delta - nf.sign * nf.omega_eff) / q.mu;
    }
    return nf;
}

std::vector<double> matrix_oracle(const QuadraticForm& q, int cutoff) {
    if (cutoff < 8) {
        throw CutoffTooSmallError("matrix_oracle: cutoff must be >= 8");
    }
    const int dim = cutoff + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        h(n, n) = q.mu * n;
        if (n + 2 < dim) {
            const double v = 0.5 * q.delta * std::sqrt(double(n + 1) * double(n + 2));
            h(n + 2, n) = v;
            h(n, n + 2) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    std::vector<double> evals(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
    std::sort(evals.begin(), evals.end());
    return evals;
}

} // namespace dicke
