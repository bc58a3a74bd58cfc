#include "dqlin/matrix.hpp"

#include <cmath>
#include <random>

namespace dqlin {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Quaternion{1.0};
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("QMatrix multiply: inner dimensions do not match");
    QMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Quaternion& aik = a(i, k);
            if (max_abs(aik) == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

QMatrix adjoint(const QMatrix& a) {
    QMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(j, i) = conj(a(i, j));
    return out;
}

double max_abs(const QMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, max_abs(a(i, j)));
    return m;
}

double frobenius_norm(const QMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            sum += norm_sq(a(i, j));
    return std::sqrt(sum);
}

DQMatrix DQMatrix::identity(int n) {
    DQMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = DualQuaternion{1.0};
    return m;
}

DQMatrix DQMatrix::diagonal(const std::vector<DualQuaternion>& entries) {
    const int n = static_cast<int>(entries.size());
    DQMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

DQMatrix DQMatrix::from_parts(const QMatrix& std_part, const QMatrix& dual_part) {
    if (std_part.rows() != dual_part.rows() || std_part.cols() != dual_part.cols())
        throw InputError("from_parts: part shapes differ");
    DQMatrix m(std_part.rows(), std_part.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = {std_part(i, j), dual_part(i, j)};
    return m;
}

DQMatrix DQMatrix::from_standard(const QMatrix& std_part) {
    DQMatrix m(std_part.rows(), std_part.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = DualQuaternion{std_part(i, j)};
    return m;
}

QMatrix DQMatrix::standard() const {
    QMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j).s;
    return m;
}

QMatrix DQMatrix::dual() const {
    QMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j).d;
    return m;
}

std::vector<DualQuaternion> DQMatrix::row(int i) const {
    std::vector<DualQuaternion> v(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = (*this)(i, j);
    return v;
}

std::vector<DualQuaternion> DQMatrix::col(int j) const {
    std::vector<DualQuaternion> v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
    return v;
}

DQMatrix operator+(const DQMatrix& a, const DQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("DQMatrix add: shapes differ");
    DQMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

DQMatrix operator-(const DQMatrix& a, const DQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("DQMatrix subtract: shapes differ");
    DQMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

DQMatrix operator*(const DQMatrix& a, const DQMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("DQMatrix multiply: inner dimensions do not match");
    DQMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const DualQuaternion& aik = a(i, k);
            if (max_abs(aik) == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

DQMatrix operator*(double c, const DQMatrix& a) {
    DQMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = c * a(i, j);
    return out;
}

DQMatrix operator*(const DualQuaternion& c, const DQMatrix& a) {
    DQMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = c * a(i, j);
    return out;
}

DQMatrix conjugate_transpose(const DQMatrix& a) {
    DQMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(j, i) = conj(a(i, j));
    return out;
}

double max_abs(const DQMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, max_abs(a(i, j)));
    return m;
}

double max_abs_diff(const DQMatrix& a, const DQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("max_abs_diff: shapes differ");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, max_abs(a(i, j) - b(i, j)));
    return m;
}

bool is_hermitian(const DQMatrix& a, double tol) {
    if (!a.square()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            if (max_abs(a(i, j) - conj(a(j, i))) > tol) return false;
    return true;
}

bool is_almost_hermitian_at(const DQMatrix& a, int k, double tol) {
    if (!a.square()) return false;
    if (k < 1 || k > a.rows())
        throw InputError("is_almost_hermitian_at: k out of range");
    for (int i = 0; i < a.rows(); ++i) {
        if (i == k - 1) continue;
        for (int j = i; j < a.cols(); ++j) {
            if (j == k - 1) continue;
            if (max_abs(a(i, j) - conj(a(j, i))) > tol) return false;
        }
    }
    return true;
}

bool is_unitary(const DQMatrix& a, double tol) {
    if (!a.square()) return false;
    return max_abs_diff(conjugate_transpose(a) * a, DQMatrix::identity(a.rows())) <= tol;
}

HermitianTag classify(const DQMatrix& a, double tol) {
    if (!a.square())
        throw InputError("classify: matrix is not square");
    HermitianTag tag;
    tag.tolerance = tol;
    tag.unitary = is_unitary(a, tol);
    if (is_hermitian(a, tol)) {
        tag.kind = HermitianKind::Hermitian;
        return tag;
    }
    for (int k = 1; k <= a.rows(); ++k) {
        if (is_almost_hermitian_at(a, k, tol)) {
            tag.kind = HermitianKind::AlmostHermitian;
            tag.k = k;
            return tag;
        }
    }
    tag.kind = HermitianKind::General;
    return tag;
}

namespace {

void check_index(int n, int i, const char* what) {
    if (i < 1 || i > n)
        throw InputError(std::string(what) + ": index out of range");
}

} // namespace

DQMatrix switching_matrix(int n, int i, int j) {
    check_index(n, i, "switching_matrix");
    check_index(n, j, "switching_matrix");
    if (i == j) throw InputError("switching_matrix: i == j");
    DQMatrix m = DQMatrix::identity(n);
    m(i - 1, i - 1) = DualQuaternion{};
    m(j - 1, j - 1) = DualQuaternion{};
    m(i - 1, j - 1) = DualQuaternion{1.0};
    m(j - 1, i - 1) = DualQuaternion{1.0};
    return m;
}

DQMatrix multiplication_matrix(int n, int i, const DualQuaternion& c) {
    check_index(n, i, "multiplication_matrix");
    DQMatrix m = DQMatrix::identity(n);
    m(i - 1, i - 1) = c;
    return m;
}

DQMatrix addition_matrix(int n, int i, int j, const DualQuaternion& c) {
    check_index(n, i, "addition_matrix");
    check_index(n, j, "addition_matrix");
    if (i == j) throw InputError("addition_matrix: i == j");
    DQMatrix m = DQMatrix::identity(n);
    m(j - 1, i - 1) = c;
    return m;
}

DQMatrix congruence(const DQMatrix& p, const DQMatrix& a) {
    return conjugate_transpose(p) * a * p;
}

DQMatrix replace_row(const DQMatrix& a, int i, const std::vector<DualQuaternion>& v) {
    check_index(a.rows(), i, "replace_row");
    if (static_cast<int>(v.size()) != a.cols())
        throw InputError("replace_row: vector length does not match");
    DQMatrix out = a;
    for (int j = 0; j < a.cols(); ++j) out(i - 1, j) = v[static_cast<size_t>(j)];
    return out;
}

DQMatrix replace_col(const DQMatrix& a, int j, const std::vector<DualQuaternion>& v) {
    check_index(a.cols(), j, "replace_col");
    if (static_cast<int>(v.size()) != a.rows())
        throw InputError("replace_col: vector length does not match");
    DQMatrix out = a;
    for (int i = 0; i < a.rows(); ++i) out(i, j - 1) = v[static_cast<size_t>(i)];
    return out;
}

DQMatrix minor(const DQMatrix& a, int i, int j) {
    if (!a.square() || a.rows() < 2)
        throw InputError("minor: matrix must be square with n >= 2");
    check_index(a.rows(), i, "minor");
    check_index(a.cols(), j, "minor");
    DQMatrix out(a.rows() - 1, a.cols() - 1);
    for (int r = 0, ro = 0; r < a.rows(); ++r) {
        if (r == i - 1) continue;
        for (int c = 0, co = 0; c < a.cols(); ++c) {
            if (c == j - 1) continue;
            out(ro, co) = a(r, c);
            ++co;
        }
        ++ro;
    }
    return out;
}

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

DualQuaternion random_dq(std::mt19937_64& rng, double scale) {
    const Quaternion s = random_quaternion(rng, scale);
    const Quaternion d = random_quaternion(rng, scale);
    return {s, d};
}

QMatrix random_qmatrix(std::mt19937_64& rng, int n, double scale) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = random_quaternion(rng, scale);
    return m;
}

} // namespace

DQMatrix random_matrix(int n, uint64_t seed, double scale) {
    if (n < 1) throw InputError("random_matrix: n must be at least 1");
    std::mt19937_64 rng(seed);
    DQMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = random_dq(rng, scale);
    return m;
}

DQMatrix random_hermitian(int n, uint64_t seed, double scale) {
    const DQMatrix b = random_matrix(n, seed, scale);
    return 0.5 * (b + conjugate_transpose(b));
}

QMatrix gram_schmidt(const QMatrix& a, double breakdown_tol) {
    const int n = a.rows();
    QMatrix q = a;
    for (int j = 0; j < n; ++j) {
        for (int prev = 0; prev < j; ++prev) {
            // alpha = <u_prev, v_j> = sum_i conj(u_i) v_i
            Quaternion alpha{};
            for (int i = 0; i < n; ++i) alpha += conj(q(i, prev)) * q(i, j);
            for (int i = 0; i < n; ++i) q(i, j) -= q(i, prev) * alpha;
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += norm_sq(q(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < breakdown_tol)
            throw ConvergenceError("gram_schmidt: breakdown, near-dependent columns");
        for (int i = 0; i < n; ++i) q(i, j) = (1.0 / nrm) * q(i, j);
    }
    return q;
}

DQMatrix random_unitary(int n, uint64_t seed) {
    if (n < 1) throw InputError("random_unitary: n must be at least 1");
    constexpr int kMaxRetries = 8;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
        QMatrix us;
        try {
            us = gram_schmidt(random_qmatrix(rng, n, 1.0));
        } catch (const ConvergenceError&) {
            continue;
        }
        const QMatrix t = random_qmatrix(rng, n, 1.0);
        // S = (T - T*)/2 is skew-Hermitian, so (I + eps S)*(I + eps S) = I.
        QMatrix s(n, n);
        const QMatrix tadj = adjoint(t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s(i, j) = 0.5 * (t(i, j) - tadj(i, j));
        return DQMatrix::from_parts(us, us * s);
    }
    throw ConvergenceError("random_unitary: Gram-Schmidt kept breaking down");
}

} // namespace dqlin
