// gaussian_oracle.hpp — test-only closed form for the vacuum-persistence
// amplitude of a single quadratic mode, used as an independent reference for
// the Krylov propagator.
//
// For H = mu b†b + (delta/2)(b†b† + bb) with |psi(0)> the b-vacuum, the state
// stays Gaussian, psi(t) ∝ exp(c(t) b†b†/2)|0>, with the Riccati flow
//   i dc/dt = delta + 2 mu c + delta c²,  c(0) = 0,
// and L(t) = |<0|psi(t)>|² = sqrt(1 - |c(t)|²).  Solving the flow gives
//   |mu| > |delta| :  L = [1 + (delta²/w²)  sin²(w t)]^(-1/2),  w = sqrt(mu²-delta²)
//   |mu| < |delta| :  L = [cosh²(W t) + (mu²/W²) sinh²(W t)]^(-1/2),
//                                                 W = sqrt(delta²-mu²)
//   |mu| = |delta| :  L = [1 + delta² t²]^(-1/2)
// This is exact (no weak-coupling truncation), unlike the product formulas
// the library exposes.

#pragma once

#include <cmath>

namespace dicke::testing {

inline double gaussian_mode_echo(double mu, double delta, double t) {
    const double disc = mu * mu - delta * delta;
    if (disc > 0.0) {
        const double w = std::sqrt(disc);
        const double s = std::sin(w * t);
        return 1.0 / std::sqrt(1.0 + delta * delta / disc * s * s);
    }
    if (disc < 0.0) {
        const double w = std::sqrt(-disc);
        const double ch = std::cosh(w * t);
        const double sh = std::sinh(w * t);
        return 1.0 / std::sqrt(ch * ch + mu * mu / (-disc) * sh * sh);
    }
    return 1.0 / std::sqrt(1.0 + delta * delta * t * t);
}

// Exact echo of the two-boson effective model: the d1/d2 quasiparticle modes
// evolve independently with (mu, delta) = (omega ± g1, ±g2).
inline double gaussian_effective_echo(double omega, double g1, double g2, double t) {
    return gaussian_mode_echo(omega + g1, g2, t) * gaussian_mode_echo(omega - g1, -g2, t);
}

} // namespace dicke::testing
