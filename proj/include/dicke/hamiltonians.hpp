// hamiltonians.hpp — sparse matrices of the finite anisotropic Dicke model
// and of the truncated two-boson effective model, plus the basis bookkeeping
// (index maps, initial states, conserved-quantity diagnostics).

#pragma once

#include "dicke/model.hpp"
#include "dicke/sparse.hpp"

namespace dicke {

struct BasisSpec {
    int n_atoms = 1;      // N (full model only)
    int boson_cutoff = 1; // n_max: highest Fock occupation kept per mode
    int mode_count = 1;   // 1: boson ⊗ spin-N/2, 2: two bosons

    // (N+1)(n_max+1) for the full model, (n_max+1)² for two modes.
    std::int64_t dimension() const;

    void validate() const;
};

// Basis index of |j=N/2, m> ⊗ |n>: (m + N/2)(n_max+1) + n.
std::int64_t adm_index(const BasisSpec& spec, int m_plus_j, int n);

// Basis index of |n_a> ⊗ |n_b>: n_a (n_max+1) + n_b.
std::int64_t two_mode_index(const BasisSpec& spec, int n_a, int n_b);

// omega a†a + omega0 Jz + (g1/sqrt(N))(a†J- + aJ+) + (g2/sqrt(N))(a†J+ + aJ-)
// on the hard-truncated basis (raises above n_max are dropped).
SparseHamiltonian build_adm(const ModelParams& params, const BasisSpec& spec);

// omega (a†a + b†b) + g1 (a†b + ab†) + g2 (a†b† + ab), hard truncation per mode.
SparseHamiltonian build_effective(const ModelParams& params, const BasisSpec& spec);

// |⇓>|0> (m = -N/2, vacuum) and |⇑>|0> (m = +N/2, vacuum) for the full model.
StateVector initial_all_down(const BasisSpec& spec);
StateVector initial_all_up(const BasisSpec& spec);

// |0>_a |0>_b for the two-mode model.
StateVector initial_two_mode_vacuum(const BasisSpec& spec);

// Weight of the evolved state in the odd sector of the parity
// exp(i pi (a†a + Jz + N/2)) (full model) or of (-1)^(n_a+n_b) (two modes).
double odd_parity_weight(const BasisSpec& spec, const StateVector& psi);

// <a†a + Jz> (full model) or <n_a + n_b> (two modes); conserved when g2 = 0.
double excitation_expectation(const BasisSpec& spec, const StateVector& psi);

} // namespace dicke
