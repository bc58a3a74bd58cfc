#include "dqlin/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dqlin/oracle.hpp"

namespace dqlin {

DQMatrix LUFactors::p_matrix() const {
    const int n = static_cast<int>(row_order.size());
    DQMatrix p(n, n);
    for (int i = 0; i < n; ++i) p(i, row_order[static_cast<size_t>(i)]) = DualQuaternion{1.0};
    return p;
}

DQMatrix LUFactors::permuted(const DQMatrix& a) const {
    const int n = static_cast<int>(row_order.size());
    DQMatrix out(n, a.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = a(row_order[static_cast<size_t>(i)], j);
    return out;
}

namespace {

// Multiplier m with m * pivot = value.  Appreciable pivots use the
// first-order inverse; infinitesimal pivots divide the dual parts as
// quaternions (the value is then necessarily infinitesimal too).
DualQuaternion left_divide(const DualQuaternion& value, const DualQuaternion& pivot) {
    if (appreciable(pivot)) return value * inverse(pivot);
    if (is_zero(pivot.d))
        throw SingularError("lu_partial_pivot: zero pivot");
    if (!is_zero(value.s))
        throw SingularError("lu_partial_pivot: appreciable entry under infinitesimal pivot");
    return DualQuaternion{value.d * inverse(pivot.d)};
}

} // namespace

LUFactors lu_partial_pivot(const DQMatrix& a) {
    if (!a.square())
        throw InputError("lu_partial_pivot: matrix is not square");
    const int n = a.rows();

    LUFactors f;
    f.row_order.resize(static_cast<size_t>(n));
    std::iota(f.row_order.begin(), f.row_order.end(), 0);
    f.l = DQMatrix::identity(n);
    f.u = a;

    for (int j = 0; j < n; ++j) {
        int best = j;
        DualNumber best_mag = magnitude(f.u(j, j));
        for (int i = j + 1; i < n; ++i) {
            const DualNumber m = magnitude(f.u(i, j));
            if (dual_compare(m, best_mag) > 0) {
                best = i;
                best_mag = m;
            }
        }
        if (is_zero(best_mag))
            throw SingularError("lu_partial_pivot: no usable pivot in column " +
                                std::to_string(j + 1));
        if (best != j) {
            f.swaps.emplace_back(j, best);
            std::swap(f.row_order[static_cast<size_t>(j)], f.row_order[static_cast<size_t>(best)]);
            for (int c = 0; c < n; ++c) std::swap(f.u(j, c), f.u(best, c));
            for (int c = 0; c < j; ++c) std::swap(f.l(j, c), f.l(best, c));
        }
        const DualQuaternion pivot = f.u(j, j);
        for (int i = j + 1; i < n; ++i) {
            if (is_zero(f.u(i, j))) {
                f.u(i, j) = DualQuaternion{};
                continue;
            }
            const DualQuaternion m = left_divide(f.u(i, j), pivot);
            f.l(i, j) = m;
            f.u(i, j) = DualQuaternion{};
            for (int c = j + 1; c < n; ++c)
                f.u(i, c) -= m * f.u(j, c);
        }
    }
    return f;
}

namespace {

// Reduces a unit triangular matrix to the identity with addition matrices
// (add c times row src to row dst), simulating as it goes so the recorded
// coefficients come from the current matrix.  Returns ops in application
// order.
void append_triangular_elimination(DQMatrix work, bool lower,
                                   std::vector<DQMatrix>& ops,
                                   std::vector<DQMatrix>* apply_to) {
    const int n = work.rows();
    for (int j = 0; j < n; ++j) {
        for (int i = lower ? j + 1 : 0; lower ? i < n : i < j; ++i) {
            const DualQuaternion c = -work(i, j);
            if (is_zero(c, 0.0)) continue;
            // row i += c * row j
            for (int col = 0; col < n; ++col)
                work(i, col) += c * work(j, col);
            ops.push_back(addition_matrix(n, j + 1, i + 1, c));
            (void)apply_to;
        }
    }
}

} // namespace

DiagonalReduction unitary_to_diagonal(const DQMatrix& a) {
    if (!a.square())
        throw InputError("unitary_to_diagonal: matrix is not square");
    const int n = a.rows();
    if (!is_unitary(a, 1e-8))
        throw DomainError("unitary_to_diagonal: matrix is not unitary");

    const LUFactors f = lu_partial_pivot(a);

    DiagonalReduction red;
    for (const auto& [i, j] : f.swaps)
        red.ops.push_back(switching_matrix(n, i + 1, j + 1));

    // L^{-1} as addition matrices: eliminate the subdiagonal of L.
    append_triangular_elimination(f.l, /*lower=*/true, red.ops, nullptr);

    // U = U0 D with D the diagonal of U and U0 unit upper triangular.
    red.diag.resize(static_cast<size_t>(n));
    DQMatrix u0 = DQMatrix::identity(n);
    for (int j = 0; j < n; ++j) {
        const DualQuaternion d = f.u(j, j);
        red.diag[static_cast<size_t>(j)] = d;
        if (!appreciable(d))
            throw SingularError("unitary_to_diagonal: non-appreciable diagonal");
        const DualQuaternion dinv = inverse(d);
        for (int i = 0; i < j; ++i) u0(i, j) = f.u(i, j) * dinv;
    }
    // U0^{-1} as addition matrices: eliminate the superdiagonal of U0.
    append_triangular_elimination(u0, /*lower=*/false, red.ops, nullptr);

    return red;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition.

namespace {

struct QuaternionEig {
    std::vector<double> values;   // descending
    QMatrix vectors;              // orthonormal quaternion columns
};

// Eigendecomposition of a quaternion Hermitian matrix through the complex
// adjoint: the 2n x 2n adjoint has each eigenvalue with even multiplicity;
// one quaternion eigenvector per pair is extracted by quaternion
// Gram-Schmidt within each eigenspace.
QuaternionEig quaternion_hermitian_eig(const QMatrix& as) {
    const int n = as.rows();
    const oracle::ComplexMatrix chi = oracle::complex_adjoint(as);
    const oracle::ComplexEig ceig = oracle::hermitian_complex_eig(chi);

    const double scale = std::max(1.0, max_abs(as));
    const double gap_tol = 1e-7 * scale;

    QuaternionEig out;
    out.vectors = QMatrix(n, n);
    int col = 0;
    int i = 0;
    while (i < 2 * n) {
        int j = i;
        while (j + 1 < 2 * n && std::abs(ceig.values[static_cast<size_t>(j + 1)] -
                                         ceig.values[static_cast<size_t>(i)]) < gap_tol)
            ++j;
        const int dim = j - i + 1;
        if (dim % 2 != 0)
            throw ConvergenceError("quaternion_hermitian_eig: odd adjoint multiplicity");
        const int m = dim / 2;

        // Candidate quaternion vectors from the complex eigenvectors;
        // Gram-Schmidt keeps the first m independent ones.
        std::vector<std::vector<Quaternion>> basis;
        for (int c = i; c <= j && static_cast<int>(basis.size()) < m; ++c) {
            std::vector<Quaternion> v(static_cast<size_t>(n));
            for (int r = 0; r < n; ++r) {
                const std::complex<double> za = ceig.vectors.at(2 * r, c);
                const std::complex<double> zb = ceig.vectors.at(2 * r + 1, c);
                // Entry a + j b with a, b complex (b stored as q2 - q3 i).
                v[static_cast<size_t>(r)] =
                    Quaternion{za.real(), za.imag(), zb.real(), -zb.imag()};
            }
            for (const auto& u : basis) {
                Quaternion alpha{};
                for (int r = 0; r < n; ++r)
                    alpha += conj(u[static_cast<size_t>(r)]) * v[static_cast<size_t>(r)];
                for (int r = 0; r < n; ++r)
                    v[static_cast<size_t>(r)] -= u[static_cast<size_t>(r)] * alpha;
            }
            double nrm = 0.0;
            for (const auto& q : v) nrm += norm_sq(q);
            nrm = std::sqrt(nrm);
            if (nrm < 1e-6) continue;
            for (auto& q : v) q = (1.0 / nrm) * q;
            basis.push_back(std::move(v));
        }
        if (static_cast<int>(basis.size()) != m)
            throw ConvergenceError("quaternion_hermitian_eig: eigenspace extraction failed");

        double mean = 0.0;
        for (int c = i; c <= j; ++c) mean += ceig.values[static_cast<size_t>(c)];
        mean /= dim;
        for (int c = 0; c < m; ++c) {
            out.values.push_back(mean);
            for (int r = 0; r < n; ++r)
                out.vectors(r, col) = basis[static_cast<size_t>(c)][static_cast<size_t>(r)];
            ++col;
        }
        i = j + 1;
    }
    return out;
}

} // namespace

Spectrum hermitian_eig(const DQMatrix& a, bool want_vectors) {
    if (!a.square())
        throw InputError("hermitian_eig: matrix is not square");
    const int n = a.rows();
    const double scale = std::max(1.0, max_abs(a));
    if (!is_hermitian(a, 1e-8 * scale))
        throw DomainError("hermitian_eig: matrix is not Hermitian");

    const QMatrix as = a.standard();
    const QMatrix ad = a.dual();

    QuaternionEig qe = quaternion_hermitian_eig(as);
    QMatrix us = qe.vectors;

    // B = U_s* A_d U_s is Hermitian; its diagonal blocks over clusters of
    // equal standard eigenvalues carry the dual parts.
    QMatrix b = adjoint(us) * ad * us;

    const double cluster_tol = 1e-7 * std::max(1.0, frobenius_norm(as));

    std::vector<DualNumber> eigenvalues(static_cast<size_t>(n));
    std::vector<int> cluster_map(static_cast<size_t>(n));
    bool all_singleton = true;

    int cluster_id = 0;
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && std::abs(qe.values[static_cast<size_t>(j + 1)] -
                                     qe.values[static_cast<size_t>(i)]) < cluster_tol)
            ++j;
        const int m = j - i + 1;
        if (m == 1) {
            eigenvalues[static_cast<size_t>(i)] = {qe.values[static_cast<size_t>(i)],
                                                   re(b(i, i))};
        } else {
            all_singleton = false;
            // Diagonalize the m x m Hermitian block of B; rotate the
            // cluster's eigenvector columns accordingly.
            QMatrix block(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    block(r, c) = b(i + r, i + c);
            QuaternionEig be = quaternion_hermitian_eig(block);
            QMatrix cols(n, m);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < m; ++c)
                    cols(r, c) = us(r, i + c);
            const QMatrix rotated = cols * be.vectors;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < m; ++c)
                    us(r, i + c) = rotated(r, c);
            for (int c = 0; c < m; ++c)
                eigenvalues[static_cast<size_t>(i + c)] = {qe.values[static_cast<size_t>(i + c)],
                                                           be.values[static_cast<size_t>(c)]};
        }
        for (int c = i; c <= j; ++c) cluster_map[static_cast<size_t>(c)] = cluster_id;
        ++cluster_id;
        i = j + 1;
    }

    // Descending under the dual order; columns follow their eigenvalues.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return eigenvalues[static_cast<size_t>(x)] > eigenvalues[static_cast<size_t>(y)];
    });

    Spectrum spec;
    spec.eigenvalues.resize(static_cast<size_t>(n));
    spec.cluster_map.resize(static_cast<size_t>(n));
    QMatrix us_sorted(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<size_t>(c)];
        spec.eigenvalues[static_cast<size_t>(c)] = eigenvalues[static_cast<size_t>(src)];
        spec.cluster_map[static_cast<size_t>(c)] = cluster_map[static_cast<size_t>(src)];
        for (int r = 0; r < n; ++r) us_sorted(r, c) = us(r, src);
    }

    if (!want_vectors) return spec;
    if (!all_singleton) {
        spec.vectors_refused = true;
        return spec;
    }

    // U = U_s (I + eps C) with C_ij = B_ij / (lambda_j,s - lambda_i,s) and
    // C_ii = 0; C is skew-Hermitian, so U is unitary to first order.
    const QMatrix bs = adjoint(us_sorted) * ad * us_sorted;
    QMatrix c(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (r == s) continue;
            const double gap = spec.eigenvalues[static_cast<size_t>(s)].s -
                               spec.eigenvalues[static_cast<size_t>(r)].s;
            c(r, s) = (1.0 / gap) * bs(r, s);
        }
    const DQMatrix u = DQMatrix::from_parts(us_sorted, us_sorted * c);

    const DQMatrix lambda = DQMatrix::diagonal([&] {
        std::vector<DualQuaternion> d;
        d.reserve(static_cast<size_t>(n));
        for (const auto& ev : spec.eigenvalues) d.emplace_back(ev);
        return d;
    }());
    const double tol = 1e-6 * scale;
    if (max_abs_diff(conjugate_transpose(u) * u, DQMatrix::identity(n)) > tol ||
        max_abs_diff(conjugate_transpose(u) * a * u, lambda) > tol)
        throw ConvergenceError("hermitian_eig: eigenvector postcondition failed");

    spec.eigenvectors = u;
    return spec;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial.

DualNumber DualPolynomial::evaluate(const DualNumber& x) const {
    DualNumber acc;
    for (size_t i = coefficients.size(); i-- > 0;)
        acc = acc * x + coefficients[i];
    return acc;
}

DualPolynomial DualPolynomial::from_roots(const std::vector<DualNumber>& roots) {
    DualPolynomial p;
    p.coefficients = {DualNumber{1.0}};
    for (const auto& r : roots) {
        // Multiply by (x - r).
        std::vector<DualNumber> next(p.coefficients.size() + 1);
        for (size_t i = 0; i < p.coefficients.size(); ++i) {
            next[i + 1] = next[i + 1] + p.coefficients[i];
            next[i] = next[i] - r * p.coefficients[i];
        }
        p.coefficients = std::move(next);
    }
    return p;
}

DualPolynomial char_poly(const DQMatrix& a, int cap) {
    if (!a.square())
        throw InputError("char_poly: matrix is not square");
    if (a.rows() > cap)
        throw SizeCapError("char_poly: size exceeds cap");
    const Spectrum spec = hermitian_eig(a, false);
    return DualPolynomial::from_roots(spec.eigenvalues);
}

DualNumber quasi_char_poly_eval(const DualPolynomial& p, const DualNumber& lambda) {
    const DualNumber v = p.evaluate(lambda);
    const DualNumber m = magnitude(DualQuaternion{v});
    return m * m;
}

SingularityReport singularity_classify(const DQMatrix& a, int cap) {
    const double scale = std::max(1.0, max_abs(a));
    const double tol = 1e-9 * scale;

    SingularityReport rep;
    rep.mdet = moore_det(a, cap);
    if (!rep.mdet.as_dual_number)
        throw DomainError("singularity_classify: matrix is not Hermitian");
    rep.eigenvalues = hermitian_eig(a, false).eigenvalues;

    rep.mdet_zero = is_zero(*rep.mdet.as_dual_number, tol);
    int zero_standard = 0;
    bool any_fully_zero = false;
    for (const auto& ev : rep.eigenvalues) {
        if (std::abs(ev.s) <= tol) {
            ++zero_standard;
            if (std::abs(ev.d) <= tol) any_fully_zero = true;
        }
    }
    rep.eigen_criterion = any_fully_zero || zero_standard >= 2;
    rep.consistent = rep.mdet_zero == rep.eigen_criterion;
    return rep;
}

} // namespace dqlin
