#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dqlin/determinant.hpp"
#include "dqlin/matrix.hpp"

namespace dqlin {

// PA = LU with L unit lower triangular and U upper triangular.
struct LUFactors {
    // row_order[i] is the original (zero-based) row placed at position i,
    // i.e. (PA)(i, j) = A(row_order[i], j).
    std::vector<int> row_order;
    // The swaps performed, in order, as zero-based row index pairs.
    std::vector<std::pair<int, int>> swaps;
    DQMatrix l;
    DQMatrix u;

    DQMatrix p_matrix() const;
    DQMatrix permuted(const DQMatrix& a) const;
};

// Partial pivoting over the dual-number magnitude order: at each step the
// pivot maximizes |entry| under the lexicographic dual comparison.
LUFactors lu_partial_pivot(const DQMatrix& a);

struct DiagonalReduction {
    // Elementary matrices in application order: ops[t-1] * ... * ops[0] * A
    // is diagonal.
    std::vector<DQMatrix> ops;
    std::vector<DualQuaternion> diag;
};

// Reduces a unitary matrix to diagonal form by switching and addition
// matrices; the diagonal magnitudes multiply to 1.
DiagonalReduction unitary_to_diagonal(const DQMatrix& a);

struct Spectrum {
    // Sorted descending under the dual-number order.
    std::vector<DualNumber> eigenvalues;
    // cluster_map[i] identifies the group of (numerically) equal standard
    // parts that eigenvalue i belongs to.
    std::vector<int> cluster_map;
    // Unitary U with U* A U = diag(eigenvalues); present only when vectors
    // were requested and every standard eigenvalue is simple.
    std::optional<DQMatrix> eigenvectors;
    // Set when vectors were requested but a repeated standard eigenvalue
    // made the dual-part construction ill-posed.
    bool vectors_refused = false;
};

Spectrum hermitian_eig(const DQMatrix& a, bool want_vectors = false);

// Monic polynomial with dual-number coefficients, stored low-to-high
// degree: p(x) = sum_i coefficients[i] x^i.
struct DualPolynomial {
    std::vector<DualNumber> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    DualNumber evaluate(const DualNumber& x) const;

    static DualPolynomial from_roots(const std::vector<DualNumber>& roots);
};

// p(lambda) = Mdet(lambda I - A), computed by expanding the product over
// the eigenvalues.
DualPolynomial char_poly(const DQMatrix& a, int cap = kDetCap);

// p_q(lambda) = |p(lambda)|^2; the sign information of p is lost.
DualNumber quasi_char_poly_eval(const DualPolynomial& p, const DualNumber& lambda);

struct SingularityReport {
    DetResult mdet;
    std::vector<DualNumber> eigenvalues;
    // Mdet(A) is numerically zero.
    bool mdet_zero = false;
    // Some eigenvalue is zero, or two eigenvalues have zero standard part.
    bool eigen_criterion = false;
    bool consistent = false;
};

// Checks the biconditional: Mdet(A) = 0 iff at least one zero or two
// infinitesimal eigenvalues.
SingularityReport singularity_classify(const DQMatrix& a, int cap = kDetCap);

} // namespace dqlin
