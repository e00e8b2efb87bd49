#include "dicke/model.hpp"

#include <cmath>

namespace dicke {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

std::complex<double> half_sqrt(double disc) {
    // (1/2)sqrt(disc) continued to negative arguments along the upper branch
    if (disc >= 0.0) return {0.5 * std::sqrt(disc), 0.0};
    return {0.0, 0.5 * std::sqrt(-disc)};
}

void normalize2(std::complex<double> v[2]) {
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (n > 0.0) {
        v[0] /= n;
        v[1] /= n;
    }
}

NambuBlock make_block(int index, double mu, double delta) {
    NambuBlock b;
    b.index = index;
    b.mu = mu;
    b.delta = delta;

    const double am = std::abs(mu);
    const double ad = std::abs(delta);
    b.at_exceptional_point = std::abs(am - ad) <= kBoundaryTol * std::max(am, ad);

    if (b.at_exceptional_point) {
        b.eigenvalue_plus = b.eigenvalue_minus = 0.0;
        if (delta == 0.0) {
            // mu = delta = 0: the block vanishes identically
            b.eigenvector_plus[0] = 1.0;
            b.eigenvector_plus[1] = 0.0;
        } else {
            b.eigenvector_plus[0] = -mu / delta;
            b.eigenvector_plus[1] = 1.0;
            normalize2(b.eigenvector_plus);
        }
        b.eigenvector_minus[0] = b.eigenvector_plus[0];
        b.eigenvector_minus[1] = b.eigenvector_plus[1];
        return b;
    }

    const double disc = (am - ad) * (am + ad);
    b.eigenvalue_plus = half_sqrt(disc);
    b.eigenvalue_minus = -b.eigenvalue_plus;

    if (delta == 0.0) {
        // diagonal block: eigenvectors are the basis vectors
        const bool plus_first = mu > 0.0;
        b.eigenvector_plus[0] = plus_first ? 1.0 : 0.0;
        b.eigenvector_plus[1] = plus_first ? 0.0 : 1.0;
        b.eigenvector_minus[0] = plus_first ? 0.0 : 1.0;
        b.eigenvector_minus[1] = plus_first ? 1.0 : 0.0;
        return b;
    }

    b.eigenvector_plus[0] = -(mu + 2.0 * b.eigenvalue_plus) / delta;
    b.eigenvector_plus[1] = 1.0;
    b.eigenvector_minus[0] = -(mu + 2.0 * b.eigenvalue_minus) / delta;
    b.eigenvector_minus[1] = 1.0;
    normalize2(b.eigenvector_plus);
    normalize2(b.eigenvector_minus);
    return b;
}

} // namespace

void ModelParams::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw InvalidParamsError("ModelParams: omega must be positive and finite");
    }
    if (!(g1 >= 0.0) || !(g2 >= 0.0) || !std::isfinite(g1) || !std::isfinite(g2)) {
        throw InvalidParamsError("ModelParams: couplings must be non-negative and finite");
    }
    if (!std::isfinite(omega0)) {
        throw InvalidParamsError("ModelParams: omega0 must be finite");
    }
    if (n_atoms < 1) {
        throw InvalidParamsError("ModelParams: n_atoms must be >= 1");
    }
}

void ModelParams::require_equal_frequencies() const {
    validate();
    if (omega0 != omega) {
        throw UnsupportedParamsError(
            "closed-form results require omega0 = omega; got omega0 != omega");
    }
}

const char* to_string(PhaseTag tag) {
    switch (tag) {
        case PhaseTag::NP: return "NP";
        case PhaseTag::SP1: return "SP1";
        case PhaseTag::SP2: return "SP2";
        case PhaseTag::SP3: return "SP3";
        case PhaseTag::Boundary: return "Boundary";
    }
    return "?";
}

const char* to_string(OscillatorKind kind) {
    switch (kind) {
        case OscillatorKind::HarmonicOscillator: return "HO";
        case OscillatorKind::InvertedHarmonicOscillator: return "IHO";
        case OscillatorKind::AntiHarmonicOscillator: return "AHO";
    }
    return "?";
}

double NambuBlock::eigenvector_alignment() const {
    const std::complex<double> ip = std::conj(eigenvector_plus[0]) * eigenvector_minus[0] +
                                    std::conj(eigenvector_plus[1]) * eigenvector_minus[1];
    return std::abs(ip);
}

PhaseRegion classify_phase(const ModelParams& params) {
    params.require_equal_frequencies();
    const double w = params.omega;
    const double tol = kBoundaryTol * w;

    // Signed expressions for the three critical lines; all have slope ±1, so
    // Euclidean distance is |expr| / sqrt(2).
    const double e_np = params.g1 + params.g2 - w;   // g1 + g2 = omega
    const double e_12 = params.g2 - (params.g1 - w); // g2 = g1 - omega
    const double e_23 = params.g2 - (params.g1 + w); // g2 = g1 + omega

    PhaseRegion r;
    const double d_np = std::abs(e_np) * kSqrtHalf;
    const double d_12 = std::abs(e_12) * kSqrtHalf;
    const double d_23 = std::abs(e_23) * kSqrtHalf;
    if (d_np <= tol || d_12 <= tol || d_23 <= tol) {
        r.tag = PhaseTag::Boundary;
        if (d_np <= d_12 && d_np <= d_23) {
            r.boundary_detail = "g1+g2=omega (NP critical line, EP of h2)";
        } else if (d_12 <= d_23) {
            r.boundary_detail = "g2=g1-omega (SP1/SP2 line, EP of h2)";
        } else {
            r.boundary_detail = "g2=g1+omega (SP2/SP3 line, EP of h1)";
        }
        return r;
    }

    if (e_np < 0.0) {
        r.tag = PhaseTag::NP;
    } else if (e_12 < 0.0) {
        r.tag = PhaseTag::SP1;
    } else if (e_23 > 0.0) {
        r.tag = PhaseTag::SP3;
    } else {
        r.tag = PhaseTag::SP2;
    }
    return r;
}

std::pair<NambuBlock, NambuBlock> nambu_blocks(const ModelParams& params) {
    params.require_equal_frequencies();
    return {make_block(1, params.omega + params.g1, params.g2),
            make_block(2, params.omega - params.g1, -params.g2)};
}

std::pair<double, double> effective_frequencies(const ModelParams& params) {
    params.require_equal_frequencies();
    const double mu1 = params.omega + params.g1;
    const double mu2 = params.omega - params.g1;
    const auto freq = [&](double mu) {
        const double am = std::abs(mu);
        return std::sqrt(std::abs((am - params.g2) * (am + params.g2)));
    };
    return {freq(mu1), freq(mu2)};
}

std::pair<EquivalentHamiltonian, EquivalentHamiltonian> region_hamiltonians(const ModelParams& params) {
    const PhaseRegion region = classify_phase(params);
    if (region.is_boundary()) {
        throw OnBoundaryError("region_hamiltonians: point lies on a critical line (" +
                              region.boundary_detail + ")");
    }

    const auto build = [&](int index) {
        const double mu = index == 1 ? params.omega + params.g1 : params.omega - params.g1;
        // The rotation-parameter formulas are written with pairing +g2 for
        // both blocks; the physical sign of block 2's pairing shows up only
        // in the sign field of the inverted-oscillator form.
        const NormalForm nf = diagonalize(QuadraticForm{mu, params.g2});

        EquivalentHamiltonian eh;
        eh.omega_eff = nf.omega_eff;
        eh.offset = -mu / 2.0;
        eh.tanh_theta_canonical = nf.tanh_theta;
        switch (nf.kind) {
            case NormalFormKind::HO:
                eh.kind = OscillatorKind::HarmonicOscillator;
                eh.sign = 1;
                eh.tanh_theta = nf.tanh_theta;
                break;
            case NormalFormKind::AHO:
                eh.kind = OscillatorKind::AntiHarmonicOscillator;
                eh.sign = -1;
                eh.tanh_theta = nf.tanh_theta;
                break;
            case NormalFormKind::IHO: {
                eh.kind = OscillatorKind::InvertedHarmonicOscillator;
                eh.sign = index == 1 ? 1 : -1;
                const double im = index == 1 ? nf.omega_eff : -nf.omega_eff;
                eh.tanh_theta = mu != 0.0 ? std::complex<double>(params.g2, im) / mu
                                          : std::complex<double>(nf.tanh_theta, 0.0);
                break;
            }
            case NormalFormKind::Degenerate:
                throw OnBoundaryError("region_hamiltonians: degenerate block");
        }
        return eh;
    };

    return {build(1), build(2)};
}

} // namespace dicke
