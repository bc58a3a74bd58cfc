#include "dqlin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "dqlin/errors.hpp"

namespace dqlin {
namespace oracle {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows)
        throw InputError("oracle::multiply: inner dimensions do not match");
    ComplexMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>{}) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.data) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& v : a.data) sum += std::norm(v);
    return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows != a.cols) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i; j < a.cols; ++j)
            if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
    return true;
}

ComplexMatrix complex_adjoint(const QMatrix& as) {
    const int n = as.rows();
    ComplexMatrix out(2 * n, 2 * as.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < as.cols(); ++j) {
            const Quaternion& q = as(i, j);
            // q = a + j b with a = q0 + q1 i and b = q2 - q3 i, so that
            // j b = q2 j + q3 k and the map is multiplicative.
            const std::complex<double> a(q.w, q.x);
            const std::complex<double> b(q.y, -q.z);
            out.at(2 * i, 2 * j) = a;
            out.at(2 * i, 2 * j + 1) = -std::conj(b);
            out.at(2 * i + 1, 2 * j) = b;
            out.at(2 * i + 1, 2 * j + 1) = std::conj(a);
        }
    return out;
}

ComplexEig hermitian_complex_eig(const ComplexMatrix& h, int max_sweeps) {
    const int n = h.rows;
    if (h.rows != h.cols)
        throw InputError("hermitian_complex_eig: matrix is not square");
    const double scale = std::max(1.0, max_abs(h));
    if (!is_hermitian(h, 1e-10 * scale))
        throw DomainError("hermitian_complex_eig: matrix is not Hermitian");

    ComplexMatrix a = h;
    ComplexMatrix v(n, n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    const double norm_h = frobenius_norm(h);
    const double target = 1e-12 * std::max(norm_h, 1e-300);

    bool converged = norm_h == 0.0;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += 2.0 * std::norm(a.at(p, q));
        if (std::sqrt(off) < target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double ah = std::abs(a.at(p, q));
                if (ah <= 1e-300) continue;
                // Phase similarity: makes the (p,q) entry real positive.
                const std::complex<double> u = a.at(p, q) / ah;
                const std::complex<double> ubar = std::conj(u);
                for (int i = 0; i < n; ++i) {
                    if (i != q) {
                        a.at(i, q) *= ubar;
                        a.at(q, i) *= u;
                    }
                    v.at(i, q) *= ubar;
                }
                // Real Jacobi rotation on the (p,q) plane.
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * ah);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const std::complex<double> aip = a.at(i, p);
                    const std::complex<double> aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const std::complex<double> api = a.at(p, i);
                    const std::complex<double> aqi = a.at(q, i);
                    a.at(p, i) = c * api - s * aqi;
                    a.at(q, i) = s * api + c * aqi;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    const std::complex<double> vip = v.at(i, p);
                    const std::complex<double> viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * viq;
                    v.at(i, q) = s * vip + c * viq;
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += 2.0 * std::norm(a.at(p, q));
        if (std::sqrt(off) >= target)
            throw ConvergenceError("hermitian_complex_eig: Jacobi sweeps exhausted");
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a.at(x, x).real() > a.at(y, y).real();
    });

    ComplexEig eig;
    eig.values.resize(static_cast<size_t>(n));
    eig.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        eig.values[static_cast<size_t>(j)] = a.at(order[static_cast<size_t>(j)],
                                                  order[static_cast<size_t>(j)]).real();
        for (int i = 0; i < n; ++i)
            eig.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
    }
    return eig;
}

// ---------------------------------------------------------------------------
// Brute-force determinants.  Everything below is written from the raw
// definitions with its own scalar arithmetic; it deliberately does not call
// the quaternion, permutation, or determinant modules.

namespace {

// A dual quaternion as eight doubles: standard (1,i,j,k) then dual (1,i,j,k).
using Oct = std::array<double, 8>;

// Basis product e_r * e_c for r,c in {1,i,j,k}: target index and sign.
constexpr int kMulIdx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr double kMulSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

Oct oct_mul(const Oct& a, const Oct& b) {
    Oct out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const int t = kMulIdx[r][c];
            const double s = kMulSign[r][c];
            // standard*standard, standard*dual, dual*standard; dual*dual drops.
            out[t] += s * a[r] * b[c];
            out[t + 4] += s * (a[r] * b[c + 4] + a[r + 4] * b[c]);
        }
    return out;
}

Oct oct_entry(const DQMatrix& a, int r, int c) {
    const DualQuaternion& q = a(r, c);
    return {q.s.w, q.s.x, q.s.y, q.s.z, q.d.w, q.d.x, q.d.y, q.d.z};
}

void oct_add_scaled(Oct& acc, const Oct& v, double s) {
    for (int i = 0; i < 8; ++i) acc[i] += s * v[i];
}

// Orbits of a permutation given as zero-based images, each orbit starting
// at its smallest unvisited element.
std::vector<std::vector<int>> orbits(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> orb;
        int cur = s;
        do {
            orb.push_back(cur);
            seen[static_cast<size_t>(cur)] = 1;
            cur = p[static_cast<size_t>(cur)];
        } while (cur != s);
        out.push_back(std::move(orb));
    }
    return out;
}

void rotate_front(std::vector<int>& c, int lead) {
    auto it = std::find(c.begin(), c.end(), lead);
    std::rotate(c.begin(), it, c.end());
}

// Parity by counting inversions of the one-line form.
double parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1.0 : -1.0;
}

Oct cycle_list_product(const DQMatrix& a, const std::vector<std::vector<int>>& cycles) {
    Oct prod{1, 0, 0, 0, 0, 0, 0, 0};
    for (const auto& cyc : cycles) {
        const size_t k = cyc.size();
        for (size_t i = 0; i < k; ++i)
            prod = oct_mul(prod, oct_entry(a, cyc[i], cyc[(i + 1) % k]));
    }
    return prod;
}

template <typename PerPermutation>
void for_each_permutation(int n, PerPermutation&& fn) {
    std::vector<int> p(static_cast<size_t>(n));
    std::vector<char> used(static_cast<size_t>(n), 0);
    // Explicit odometer recursion instead of std::next_permutation.
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            fn(p);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            p[static_cast<size_t>(depth)] = v;
            self(self, depth + 1);
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

void check_brute(const DQMatrix& a) {
    if (!a.square())
        throw InputError("brute determinant: matrix is not square");
    if (a.rows() > 7)
        throw SizeCapError("brute determinant: n > 7");
}

DualQuaternion to_dq(const Oct& o) {
    return {Quaternion{o[0], o[1], o[2], o[3]}, Quaternion{o[4], o[5], o[6], o[7]}};
}

} // namespace

DualQuaternion brute_moore_det(const DQMatrix& a) {
    check_brute(a);
    Oct total{};
    for_each_permutation(a.rows(), [&](const std::vector<int>& p) {
        auto cycles = orbits(p);
        for (auto& c : cycles) rotate_front(c, *std::min_element(c.begin(), c.end()));
        std::sort(cycles.begin(), cycles.end(),
                  [](const auto& x, const auto& y) { return x.front() > y.front(); });
        oct_add_scaled(total, cycle_list_product(a, cycles), parity(p));
    });
    return to_dq(total);
}

DualQuaternion brute_chen_det(const DQMatrix& a) {
    check_brute(a);
    Oct total{};
    for_each_permutation(a.rows(), [&](const std::vector<int>& p) {
        auto cycles = orbits(p);
        for (auto& c : cycles) rotate_front(c, *std::max_element(c.begin(), c.end()));
        std::sort(cycles.begin(), cycles.end(),
                  [](const auto& x, const auto& y) { return x.front() > y.front(); });
        oct_add_scaled(total, cycle_list_product(a, cycles), parity(p));
    });
    return to_dq(total);
}

DualQuaternion brute_kyrchei_det(const DQMatrix& a, KyrcheiMode mode, int anchor) {
    check_brute(a);
    if (anchor < 1 || anchor > a.rows())
        throw InputError("brute_kyrchei_det: anchor out of range");
    const int anchor0 = anchor - 1;
    Oct total{};
    for_each_permutation(a.rows(), [&](const std::vector<int>& p) {
        auto cycles = orbits(p);
        std::vector<int> anchor_cycle;
        std::vector<std::vector<int>> rest;
        for (auto& c : cycles) {
            if (std::find(c.begin(), c.end(), anchor0) != c.end())
                anchor_cycle = std::move(c);
            else
                rest.push_back(std::move(c));
        }
        std::vector<std::vector<int>> ordered;
        if (mode == KyrcheiMode::Row) {
            rotate_front(anchor_cycle, anchor0);
            for (auto& c : rest) rotate_front(c, *std::min_element(c.begin(), c.end()));
            std::sort(rest.begin(), rest.end(),
                      [](const auto& x, const auto& y) { return x.front() < y.front(); });
            ordered.push_back(std::move(anchor_cycle));
            for (auto& c : rest) ordered.push_back(std::move(c));
        } else {
            rotate_front(anchor_cycle, anchor0);
            for (auto& c : rest) rotate_front(c, *std::min_element(c.begin(), c.end()));
            std::sort(rest.begin(), rest.end(),
                      [](const auto& x, const auto& y) { return x.front() > y.front(); });
            for (auto& c : rest) ordered.push_back(std::move(c));
            ordered.push_back(std::move(anchor_cycle));
        }
        oct_add_scaled(total, cycle_list_product(a, ordered), parity(p));
    });
    return to_dq(total);
}

double real_cofactor_det(const std::vector<std::vector<double>>& a) {
    const size_t n = a.size();
    if (n == 1) return a[0][0];
    double total = 0.0;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0.0) continue;
        std::vector<std::vector<double>> sub(n - 1, std::vector<double>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = a[r][c];
            }
        }
        const double cof = real_cofactor_det(sub);
        total += ((j % 2 == 0) ? 1.0 : -1.0) * a[0][j] * cof;
    }
    return total;
}

} // namespace oracle
} // namespace dqlin
