#include "dicke/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dicke {

double norm(const StateVector& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

Complex inner(const StateVector& a, const StateVector& b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

SparseHamiltonian SparseHamiltonian::from_triplets(std::int64_t dimension,
                                                   std::vector<Triplet> triplets) {
    if (dimension <= 0) {
        throw InvalidParamsError("SparseHamiltonian: dimension must be positive");
    }
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= dimension || t.col < 0 || t.col >= dimension) {
            throw InvalidParamsError("SparseHamiltonian: triplet index out of range");
        }
    }
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseHamiltonian h;
    h.dim_ = dimension;
    h.row_ptr_.assign(static_cast<std::size_t>(dimension) + 1, 0);
    h.cols_.reserve(triplets.size());
    h.values_.reserve(triplets.size());

    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i + 1;
        Complex sum = triplets[i].value;
        while (j < triplets.size() && triplets[j].row == triplets[i].row &&
               triplets[j].col == triplets[i].col) {
            sum += triplets[j].value;
            ++j;
        }
        if (sum != Complex{0.0, 0.0}) {
            h.cols_.push_back(triplets[i].col);
            h.values_.push_back(sum);
            ++h.row_ptr_[static_cast<std::size_t>(triplets[i].row) + 1];
        }
        i = j;
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(dimension); ++r) {
        h.row_ptr_[r + 1] += h.row_ptr_[r];
    }

    h.all_real_ = std::all_of(h.values_.begin(), h.values_.end(),
                              [](const Complex& v) { return v.imag() == 0.0; });
    if (h.all_real_) {
        h.real_values_.resize(h.values_.size());
        std::transform(h.values_.begin(), h.values_.end(), h.real_values_.begin(),
                       [](const Complex& v) { return v.real(); });
    }
    h.hermitian_ = h.hermiticity_defect() == 0.0;
    return h;
}

void SparseHamiltonian::apply(const StateVector& x, StateVector& y) const {
    y.assign(static_cast<std::size_t>(dim_), Complex{0.0, 0.0});
    if (all_real_) {
        for (std::int64_t r = 0; r < dim_; ++r) {
            double re = 0.0, im = 0.0;
            for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                const Complex& xv = x[static_cast<std::size_t>(cols_[k])];
                const double v = real_values_[static_cast<std::size_t>(k)];
                re += v * xv.real();
                im += v * xv.imag();
            }
            y[static_cast<std::size_t>(r)] = Complex{re, im};
        }
        return;
    }
    for (std::int64_t r = 0; r < dim_; ++r) {
        Complex acc{0.0, 0.0};
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            acc += values_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(cols_[k])];
        }
        y[static_cast<std::size_t>(r)] = acc;
    }
}

double SparseHamiltonian::hermiticity_defect() const {
    // H is stored fully (both triangles); compare each entry to the
    // conjugate of its transpose partner via a binary search in that row.
    double defect = 0.0;
    for (std::int64_t r = 0; r < dim_; ++r) {
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            const std::int64_t c = cols_[k];
            const auto begin = cols_.begin() + row_ptr_[c];
            const auto end = cols_.begin() + row_ptr_[c + 1];
            const auto it = std::lower_bound(begin, end, r);
            Complex partner{0.0, 0.0};
            if (it != end && *it == r) {
                partner = values_[static_cast<std::size_t>(it - cols_.begin())];
            }
            defect = std::max(defect,
                              std::abs(values_[static_cast<std::size_t>(k)] - std::conj(partner)));
        }
    }
    return defect;
}

std::vector<Triplet> SparseHamiltonian::triplets() const {
    std::vector<Triplet> out;
    out.reserve(values_.size());
    for (std::int64_t r = 0; r < dim_; ++r) {
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            out.push_back({r, cols_[k], values_[static_cast<std::size_t>(k)]});
        }
    }
    return out;
}

double SparseHamiltonian::norm_bound() const {
    double bound = 0.0;
    for (std::int64_t r = 0; r < dim_; ++r) {
        double row_sum = 0.0;
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            row_sum += std::abs(values_[static_cast<std::size_t>(k)]);
        }
        bound = std::max(bound, row_sum);
    }
    return bound;
}

} // namespace dicke
