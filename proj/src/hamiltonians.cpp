#include "dicke/hamiltonians.hpp"

#include <cmath>

namespace dicke {

namespace {

// sqrt(j(j+1) - m(m+1)) = sqrt((j-m)(j+m+1)), the J+ ladder factor
double jp_factor(double j, double m) {
    return std::sqrt((j - m) * (j + m + 1.0));
}

} // namespace

std::int64_t BasisSpec::dimension() const {
    if (mode_count == 2) {
        const std::int64_t d = boson_cutoff + 1;
        return d * d;
    }
    return static_cast<std::int64_t>(n_atoms + 1) * (boson_cutoff + 1);
}

void BasisSpec::validate() const {
    if (boson_cutoff < 1) {
        throw CutoffTooSmallError("BasisSpec: boson_cutoff must be >= 1");
    }
    if (mode_count != 1 && mode_count != 2) {
        throw InvalidParamsError("BasisSpec: mode_count must be 1 or 2");
    }
    if (mode_count == 1 && n_atoms < 1) {
        throw InvalidParamsError("BasisSpec: n_atoms must be >= 1");
    }
}

std::int64_t adm_index(const BasisSpec& spec, int m_plus_j, int n) {
    return static_cast<std::int64_t>(m_plus_j) * (spec.boson_cutoff + 1) + n;
}

std::int64_t two_mode_index(const BasisSpec& spec, int n_a, int n_b) {
    return static_cast<std::int64_t>(n_a) * (spec.boson_cutoff + 1) + n_b;
}

SparseHamiltonian build_adm(const ModelParams& params, const BasisSpec& spec) {
    params.validate();
    spec.validate();
    if (spec.mode_count != 1) {
        throw InvalidParamsError("build_adm: spec.mode_count must be 1");
    }

    const int n_max = spec.boson_cutoff;
    const int n_atoms = spec.n_atoms;
    const double j = 0.5 * n_atoms;
    const double root_n = std::sqrt(static_cast<double>(n_atoms));
    const double c1 = params.g1 / root_n;
    const double c2 = params.g2 / root_n;

    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(spec.dimension()) * 5);

    // Row-major over (m_idx, n); each Hermitian pair is pushed together so the
    // matrix is symmetric by construction.
    for (int m_idx = 0; m_idx <= n_atoms; ++m_idx) {
        const double m = m_idx - j;
        for (int n = 0; n <= n_max; ++n) {
            const std::int64_t row = adm_index(spec, m_idx, n);
            trip.push_back({row, row, Complex{params.omega * n + params.omega0 * m, 0.0}});

            // a†J-: (m, n) -> (m-1, n+1), amplitude sqrt(n+1) * jp(m-1)
            if (m_idx > 0 && n < n_max) {
                const double v = c1 * std::sqrt(n + 1.0) * jp_factor(j, m - 1.0);
                const std::int64_t other = adm_index(spec, m_idx - 1, n + 1);
                trip.push_back({other, row, Complex{v, 0.0}});
                trip.push_back({row, other, Complex{v, 0.0}});
            }
            // a†J+: (m, n) -> (m+1, n+1), amplitude sqrt(n+1) * jp(m)
            if (m_idx < n_atoms && n < n_max) {
                const double v = c2 * std::sqrt(n + 1.0) * jp_factor(j, m);
                const std::int64_t other = adm_index(spec, m_idx + 1, n + 1);
                trip.push_back({other, row, Complex{v, 0.0}});
                trip.push_back({row, other, Complex{v, 0.0}});
            }
        }
    }
    return SparseHamiltonian::from_triplets(spec.dimension(), std::move(trip));
}

SparseHamiltonian build_effective(const ModelParams& params, const BasisSpec& spec) {
    params.validate();
    spec.validate();
    if (spec.mode_count != 2) {
        throw InvalidParamsError("build_effective: spec.mode_count must be 2");
    }

    const int n_max = spec.boson_cutoff;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(spec.dimension()) * 5);

    for (int na = 0; na <= n_max; ++na) {
        for (int nb = 0; nb <= n_max; ++nb) {
            const std::int64_t row = two_mode_index(spec, na, nb);
            trip.push_back({row, row, Complex{params.omega * (na + nb), 0.0}});

            // a†b: (na, nb) -> (na+1, nb-1)
            if (na < n_max && nb > 0) {
                const double v = params.g1 * std::sqrt((na + 1.0) * nb);
                const std::int64_t other = two_mode_index(spec, na + 1, nb - 1);
                trip.push_back({other, row, Complex{v, 0.0}});
                trip.push_back({row, other, Complex{v, 0.0}});
            }
            // a†b†: (na, nb) -> (na+1, nb+1)
            if (na < n_max && nb < n_max) {
                const double v = params.g2 * std::sqrt((na + 1.0) * (nb + 1.0));
                const std::int64_t other = two_mode_index(spec, na + 1, nb + 1);
                trip.push_back({other, row, Complex{v, 0.0}});
                trip.push_back({row, other, Complex{v, 0.0}});
            }
        }
    }
    return SparseHamiltonian::from_triplets(spec.dimension(), std::move(trip));
}

namespace {

StateVector unit_state(std::int64_t dim, std::int64_t index) {
    StateVector psi(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    psi[static_cast<std::size_t>(index)] = Complex{1.0, 0.0};
    return psi;
}

} // namespace

StateVector initial_all_down(const BasisSpec& spec) {
    spec.validate();
    return unit_state(spec.dimension(), adm_index(spec, 0, 0));
}

StateVector initial_all_up(const BasisSpec& spec) {
    spec.validate();
    return unit_state(spec.dimension(), adm_index(spec, spec.n_atoms, 0));
}

StateVector initial_two_mode_vacuum(const BasisSpec& spec) {
    spec.validate();
    if (spec.mode_count != 2) {
        throw InvalidParamsError("initial_two_mode_vacuum: spec.mode_count must be 2");
    }
    return unit_state(spec.dimension(), 0);
}

double odd_parity_weight(const BasisSpec& spec, const StateVector& psi) {
    const int n_max = spec.boson_cutoff;
    double w = 0.0;
    if (spec.mode_count == 2) {
        for (int na = 0; na <= n_max; ++na) {
            for (int nb = 0; nb <= n_max; ++nb) {
                if ((na + nb) % 2 != 0) {
                    w += std::norm(psi[static_cast<std::size_t>(two_mode_index(spec, na, nb))]);
                }
            }
        }
        return w;
    }
    for (int m_idx = 0; m_idx <= spec.n_atoms; ++m_idx) {
        for (int n = 0; n <= n_max; ++n) {
            if ((m_idx + n) % 2 != 0) {  // m_idx = m + N/2
                w += std::norm(psi[static_cast<std::size_t>(adm_index(spec, m_idx, n))]);
            }
        }
    }
    return w;
}

double excitation_expectation(const BasisSpec& spec, const StateVector& psi) {
    const int n_max = spec.boson_cutoff;
    double e = 0.0;
    if (spec.mode_count == 2) {
        for (int na = 0; na <= n_max; ++na) {
            for (int nb = 0; nb <= n_max; ++nb) {
                e += (na + nb) * std::norm(psi[static_cast<std::size_t>(two_mode_index(spec, na, nb))]);
            }
        }
        return e;
    }
    const double j = 0.5 * spec.n_atoms;
    for (int m_idx = 0; m_idx <= spec.n_atoms; ++m_idx) {
        for (int n = 0; n <= n_max; ++n) {
            e += (n + m_idx - j) * std::norm(psi[static_cast<std::size_t>(adm_index(spec, m_idx, n))]);
        }
    }
    return e;
}

} // namespace dicke
