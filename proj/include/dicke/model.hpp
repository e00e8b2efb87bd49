// model.hpp — anisotropic Dicke model parameters, Nambu blocks with their
// exceptional-point structure, and the phase classifier on the (g1, g2) plane.
//
// The coupling plane splits into four dynamical regions separated by the
// critical lines g1+g2 = omega, g2 = g1-omega and g2 = g1+omega:
//   NP  — both quasiparticle blocks reduce to harmonic oscillators,
//   SP1 — (HO, AHO): bounded oscillatory dynamics in both blocks,
//   SP2 — (HO, IHO): one oscillatory and one unstable block,
//   SP3 — (IHO, IHO): both blocks unstable.
// The lines themselves are exceptional points of the 2x2 blocks h1/h2 where
// eigenvalues and eigenvectors coalesce.

#pragma once

#include <complex>
#include <string>
#include <utility>

#include "dicke/bogoliubov.hpp"
#include "dicke/errors.hpp"

namespace dicke {

struct ModelParams {
    double omega = 1.0;   // field frequency; sets the energy scale
    double omega0 = 1.0;  // atomic frequency
    double g1 = 0.0;      // rotating-wave coupling
    double g2 = 0.0;      // counter-rotating coupling
    int n_atoms = 1;

    // Throws InvalidParamsError unless omega > 0, g1 >= 0, g2 >= 0, n_atoms >= 1.
    void validate() const;

    // The closed-form results below are derived for omega0 = omega only;
    // throws UnsupportedParamsError otherwise.
    void require_equal_frequencies() const;
};

enum class PhaseTag { NP, SP1, SP2, SP3, Boundary };

const char* to_string(PhaseTag tag);

struct PhaseRegion {
    PhaseTag tag = PhaseTag::NP;
    std::string boundary_detail;  // non-empty exactly when tag == Boundary

    bool is_boundary() const { return tag == PhaseTag::Boundary; }
};

// One of the two 2x2 non-Hermitian blocks of the quadratic effective model,
//   h = (mu/2) sigma_z + (i delta/2) sigma_y,
// with mu = omega ± g1 and delta = ±g2.  Eigenvalues come in a ± pair
// λ± = ±(1/2)sqrt(mu² - delta²); both vanish at |mu| = |delta| where the
// right eigenvectors coalesce (second-order exceptional point).
struct NambuBlock {
    int index = 1;       // 1 or 2
    double mu = 0.0;     // omega + g1 (h1) or omega - g1 (h2)
    double delta = 0.0;  // +g2 (h1) or -g2 (h2)
    std::complex<double> eigenvalue_plus;
    std::complex<double> eigenvalue_minus;
    std::complex<double> eigenvector_plus[2];   // right eigenvectors, unit norm
    std::complex<double> eigenvector_minus[2];
    bool at_exceptional_point = false;

    std::complex<double> gap() const { return eigenvalue_plus - eigenvalue_minus; }

    // |<v+, v->| for the unit-norm right eigenvectors; 1 at coalescence.
    double eigenvector_alignment() const;
};

enum class OscillatorKind { HarmonicOscillator, InvertedHarmonicOscillator, AntiHarmonicOscillator };

const char* to_string(OscillatorKind kind);

// Normal form of one quasiparticle block inside a region.
//
// tanh_theta holds the value of the per-region rotation-parameter formulas;
// for HO/AHO it is real with |tanh_theta| < 1 and equals tanh_theta_canonical.
// For IHO the formula value is complex (the rotation it suggests is not a
// canonical one); the real parameter of the canonical transformation to the
// inverted-oscillator form is kept alongside in tanh_theta_canonical.  The
// complex form is undefined on g1 = omega (block 2), where the canonical
// value (zero there) is stored instead.
struct EquivalentHamiltonian {
    OscillatorKind kind = OscillatorKind::HarmonicOscillator;
    double omega_eff = 0.0;                     // Omega_i >= 0
    std::complex<double> tanh_theta{0.0, 0.0};
    double tanh_theta_canonical = 0.0;
    double offset = 0.0;                        // -(omega ± g1)/2
    int sign = 1;  // HO: +1, AHO: -1; IHO: sign of the pairing term (+ for block 1, - for block 2)
};

// Classifies (g1, g2) into NP / SP1 / SP2 / SP3, or Boundary when the point
// lies within kBoundaryTol*omega (Euclidean distance) of a critical line.
PhaseRegion classify_phase(const ModelParams& params);

// The two Nambu blocks h1, h2 with eigenstructure.  Within kBoundaryTol of
// an exceptional point the eigenvalues are snapped to exact coalescence.
std::pair<NambuBlock, NambuBlock> nambu_blocks(const ModelParams& params);

// Omega_i = omega * sqrt(|(1 ± g1/omega)² - (g2/omega)²|).
std::pair<double, double> effective_frequencies(const ModelParams& params);

// The pair of equivalent oscillators for a non-boundary point:
// (HO,HO) in NP, (HO,AHO) in SP1, (HO,IHO) in SP2, (IHO,IHO) in SP3.
// Throws OnBoundaryError when classify_phase reports Boundary.
std::pair<EquivalentHamiltonian, EquivalentHamiltonian> region_hamiltonians(const ModelParams& params);

} // namespace dicke
