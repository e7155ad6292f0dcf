#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mubkit/rng.hpp"

namespace mubkit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, the universal numeric carrier.
///
/// Composite-space index convention (the single source of truth for kron,
/// partial_trace and the measurement channel): a bipartite index (i_A, i_B)
/// on dimensions (dA, dB) maps to the flat row/column i_A * dB + i_B.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t d) {
        ComplexMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Complex>& entries() { return entries_; }
    const std::vector<Complex>& entries() const { return entries_; }

    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool has_finite_entries() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

enum class Subsystem { A, B };

/// Standard matrix product. Throws ShapeError when a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose; an exact involution.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product with the i_A * dB + i_B index convention.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the discarded tensor factor of a (dA*dB) x (dA*dB) matrix.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                            Subsystem keep);

/// Squared Hilbert-Schmidt norm: sum of squared entry moduli == tr(a' a).
double hs_norm_sq(const ComplexMatrix& a);

/// All eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi.
/// Input must be Hermitian within tol (max entry of |a - dagger(a)|),
/// otherwise DomainError.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol = 1e-12);

/// Haar-distributed d x d unitary: QR (modified Gram-Schmidt, positive real
/// R diagonal) of a matrix of standard complex Gaussians.
ComplexMatrix unitary_from_gaussian(std::size_t d, RandomStream& rng);

// small arithmetic helpers used throughout
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
Complex trace(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_hermiticity_deviation(const ComplexMatrix& a);

}  // namespace mubkit
