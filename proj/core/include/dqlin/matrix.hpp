#pragma once

#include <cstdint>
#include <vector>

#include "dqlin/dual_quaternion.hpp"
#include "dqlin/errors.hpp"

namespace dqlin {

// Dense quaternion matrix, used for standard/dual parts and as the
// workspace of the eigenvalue machinery.  Zero-based indexing.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Quaternion& operator()(int i, int j) { return data_[idx(i, j)]; }
    const Quaternion& operator()(int i, int j) const { return data_[idx(i, j)]; }

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix adjoint(const QMatrix& a);
double max_abs(const QMatrix& a);
double frobenius_norm(const QMatrix& a);

// Dense square or rectangular dual quaternion matrix.  Immutable by
// convention: all edits return new matrices.  Zero-based indexing.
class DQMatrix {
public:
    DQMatrix() = default;
    DQMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static DQMatrix identity(int n);
    static DQMatrix diagonal(const std::vector<DualQuaternion>& entries);
    static DQMatrix from_parts(const QMatrix& std_part, const QMatrix& dual_part);
    static DQMatrix from_standard(const QMatrix& std_part);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    DualQuaternion& operator()(int i, int j) { return data_[idx(i, j)]; }
    const DualQuaternion& operator()(int i, int j) const { return data_[idx(i, j)]; }

    QMatrix standard() const;
    QMatrix dual() const;

    std::vector<DualQuaternion> row(int i) const;
    std::vector<DualQuaternion> col(int j) const;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<DualQuaternion> data_;
};

DQMatrix operator+(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator-(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator*(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator*(double c, const DQMatrix& a);
DQMatrix operator*(const DualQuaternion& c, const DQMatrix& a);

// Entrywise conjugate of the transpose; an involution.
DQMatrix conjugate_transpose(const DQMatrix& a);

double max_abs(const DQMatrix& a);
double max_abs_diff(const DQMatrix& a, const DQMatrix& b);

enum class HermitianKind { Hermitian, AlmostHermitian, General };

struct HermitianTag {
    HermitianKind kind = HermitianKind::General;
    // One-based offending index for the almost-Hermitian case (smallest
    // valid one); 0 otherwise.
    int k = 0;
    double tolerance = 0.0;
    bool unitary = false;
};

bool is_hermitian(const DQMatrix& a, double tol);
// True when deleting row k and column k (one-based) leaves a Hermitian
// minor; the diagonal entry a_kk may be anything.
bool is_almost_hermitian_at(const DQMatrix& a, int k, double tol);
bool is_unitary(const DQMatrix& a, double tol);

HermitianTag classify(const DQMatrix& a, double tol = 1e-8);

// Elementary operation matrices.  One-based indices throughout; row
// operations act by left multiplication, column operations by right
// multiplication.
DQMatrix switching_matrix(int n, int i, int j);
DQMatrix multiplication_matrix(int n, int i, const DualQuaternion& c);
// Entry c at row j, column i: left multiplication adds c times row i to
// row j.
DQMatrix addition_matrix(int n, int i, int j, const DualQuaternion& c);

// Congruence helper P* A P.
DQMatrix congruence(const DQMatrix& p, const DQMatrix& a);

DQMatrix replace_row(const DQMatrix& a, int i, const std::vector<DualQuaternion>& v);
DQMatrix replace_col(const DQMatrix& a, int j, const std::vector<DualQuaternion>& v);

// Submatrix with row i and column j deleted (one-based).
DQMatrix minor(const DQMatrix& a, int i, int j);

// Seeded generators; deterministic functions of their arguments.
DQMatrix random_matrix(int n, uint64_t seed, double scale = 1.0);
DQMatrix random_hermitian(int n, uint64_t seed, double scale = 1.0);
// U = U_s (I + eps S) with U_s from quaternion Gram-Schmidt and S
// skew-Hermitian, so U* U = I to first order in eps.
DQMatrix random_unitary(int n, uint64_t seed);

// Gram-Schmidt over quaternion columns with the left inner product
// sum_i conj(u_i) v_i.  Throws ConvergenceError on breakdown.
QMatrix gram_schmidt(const QMatrix& a, double breakdown_tol = 1e-8);

} // namespace dqlin
