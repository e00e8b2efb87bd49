// bogoliubov.hpp — normal form of the single-mode quadratic Hamiltonian
//   H = mu b†b + (delta/2)(b†b† + bb)
//
// For |mu| > |delta| a real Bogoliubov rotation brings H to
//   sgn(mu) * Omega (g†g + 1/2) - mu/2,   Omega = sqrt(mu² - delta²),
// a harmonic oscillator (mu > 0) or its negative, the anti-harmonic
// oscillator (mu < 0).  For |mu| < |delta| the normal form is the inverted
// harmonic oscillator
//   sgn(delta) * (Omega/2)(g†g† + gg) - mu/2,   Omega = sqrt(delta² - mu²),
// whose spectrum is continuous and unbounded.  |mu| = |delta| is the
// exceptional point of the form; no oscillator normal form exists there.

#pragma once

#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

// Relative tolerance for degeneracy decisions, shared with the phase classifier.
inline constexpr double kBoundaryTol = 1e-9;

struct QuadraticForm {
    double mu = 0.0;     // number-operator coefficient
    double delta = 0.0;  // pairing coefficient

    bool degenerate() const;  // ||mu| - |delta|| within kBoundaryTol of zero
};

enum class NormalFormKind { HO, AHO, IHO, Degenerate };

const char* to_string(NormalFormKind kind);

struct NormalForm {
    NormalFormKind kind = NormalFormKind::Degenerate;
    double omega_eff = 0.0;   // non-negative oscillator frequency
    int sign = 1;             // sgn(mu) for HO/AHO, sgn(delta) for IHO
    double tanh_theta = 0.0;  // real rotation parameter, |tanh_theta| < 1
    double offset = 0.0;      // constant term -mu/2
};

// Throws DegenerateFormError when |mu| = |delta| within tolerance.
NormalForm diagonalize(const QuadraticForm& q);

// Brute-force check of the normal form: eigenvalues of H truncated to the
// lowest (cutoff+1) number states, sorted ascending.  Matrix elements are
//   <n|b†b|n> = n,   <n+2|b†b†|n> = sqrt((n+1)(n+2)).
std::vector<double> matrix_oracle(const QuadraticForm& q, int cutoff);

} // namespace dicke
