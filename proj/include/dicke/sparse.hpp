// sparse.hpp — Hermitian sparse matrices in CSR form with a deterministic
// canonical nonzero order (row-major, column ascending, duplicates summed in
// insertion order).

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

double norm(const StateVector& v);
Complex inner(const StateVector& a, const StateVector& b);  // <a|b>

struct Triplet {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Complex value{0.0, 0.0};
};

class SparseHamiltonian {
public:
    SparseHamiltonian() = default;

    // Builds CSR storage; duplicate (row, col) entries are summed in their
    // insertion order so assembly is bit-reproducible.
    static SparseHamiltonian from_triplets(std::int64_t dimension, std::vector<Triplet> triplets);

    std::int64_t dim() const { return dim_; }
    std::size_t nonzero_count() const { return values_.size(); }
    bool hermitian() const { return hermitian_; }

    // y = H x
    void apply(const StateVector& x, StateVector& y) const;

    // max element of |H - H†|; exactly 0 when conjugate pairs were assembled together
    double hermiticity_defect() const;

    // Canonical-order view of the nonzeros.
    std::vector<Triplet> triplets() const;

    // Crude upper bound on the spectral radius (Gershgorin), used for step control.
    double norm_bound() const;

private:
    std::int64_t dim_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int64_t> cols_;
    std::vector<Complex> values_;
    std::vector<double> real_values_;  // populated when every value is real
    bool all_real_ = false;
    bool hermitian_ = false;
};

} // namespace dicke
