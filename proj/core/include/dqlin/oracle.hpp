#pragma once

#include <complex>
#include <vector>

#include "dqlin/matrix.hpp"
#include "dqlin/permutation.hpp"

namespace dqlin {
// Self-contained cross-check machinery.  The determinant evaluators here
// share no scalar or permutation code with the main modules; they exist to
// validate them.
namespace oracle {

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c),
        data(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    std::complex<double>& at(int i, int j) {
        return data[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
    }
    const std::complex<double>& at(int i, int j) const {
        return data[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
    }
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);

// Complex adjoint of a quaternion matrix: each entry q = a + j b with
// complex a, b maps to the 2x2 block [[a, -conj(b)], [b, conj(a)]].  The
// map is an algebra homomorphism, and the adjoint of a Hermitian matrix is
// Hermitian with every eigenvalue of even multiplicity.
ComplexMatrix complex_adjoint(const QMatrix& as);

struct ComplexEig {
    // Sorted descending.
    std::vector<double> values;
    // Orthonormal eigenvectors as columns, aligned with `values`.
    ComplexMatrix vectors;
};

// Cyclic Jacobi iteration for complex Hermitian matrices.
ComplexEig hermitian_complex_eig(const ComplexMatrix& h, int max_sweeps = 100);

// From-scratch determinant sums over nested-loop permutation generation,
// with an independently written scalar product.  n <= 7.
DualQuaternion brute_moore_det(const DQMatrix& a);
DualQuaternion brute_chen_det(const DQMatrix& a);
DualQuaternion brute_kyrchei_det(const DQMatrix& a, KyrcheiMode mode, int anchor);

// Textbook cofactor expansion over the reals.
double real_cofactor_det(const std::vector<std::vector<double>>& a);

} // namespace oracle
} // namespace dqlin
