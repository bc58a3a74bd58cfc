#include "dqlin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "dqlin/decomposition.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/oracle.hpp"

namespace dqlin {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t base, size_t prop_index, int trial) {
    return splitmix64(base ^ splitmix64((static_cast<uint64_t>(prop_index) << 32) ^
                                        static_cast<uint64_t>(trial)));
}

double uniform01(uint64_t& state) {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

DualQuaternion random_dq(uint64_t seed) {
    return random_matrix(1, seed)(0, 0);
}

double rel_err(const DualQuaternion& a, const DualQuaternion& b) {
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    return max_abs(a - b) / scale;
}

double rel_err(const DualNumber& a, const DualNumber& b) {
    const double scale = std::max({1.0, std::abs(a.s), std::abs(a.d),
                                   std::abs(b.s), std::abs(b.d)});
    return std::max(std::abs(a.s - b.s), std::abs(a.d - b.d)) / scale;
}

// How far a exceeds b under the lexicographic order, as a nonnegative
// number; zero when a <= b within slack.
double order_violation(const DualNumber& a, const DualNumber& b, double slack) {
    if (a.s > b.s + slack) return a.s - b.s;
    if (std::abs(a.s - b.s) <= slack && a.d > b.d + slack) return a.d - b.d;
    return 0.0;
}

struct TrialOutcome {
    bool ok = true;
    double discrepancy = 0.0;

    void check(double disc, double tol) {
        discrepancy = std::max(discrepancy, disc);
        if (disc > tol) ok = false;
    }
};

using TrialFn = std::function<TrialOutcome(int n, uint64_t seed)>;

struct Property {
    std::string id;
    std::string description;
    TrialFn run;
};

// ---------------------------------------------------------------------------
// Scalar properties.

TrialOutcome scalar_re_bound(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q = random_dq(seed);
    out.check(order_violation(re(q), magnitude(q), 1e-12), 0.0);
    // Equality case: nonnegative dual numbers meet the bound exactly.
    uint64_t st = seed;
    const DualNumber nn{1.0 + uniform01(st), 2.0 * uniform01(st) - 1.0};
    const DualQuaternion p{nn};
    out.check(rel_err(re(p), magnitude(p)), 1e-12);
    // Strictness: anything with an imaginary component stays strictly below.
    if (max_abs(q - DualQuaternion{re(q)}) > 1e-6) {
        const DualNumber gap = magnitude(q) - re(q);
        if (!(gap > DualNumber{1e-12})) out.check(1.0, 0.0);
    }
    return out;
}

TrialOutcome scalar_re_cyclic(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q1 = random_dq(seed);
    const DualQuaternion q2 = random_dq(splitmix64(seed + 1));
    out.check(rel_err(re(q1 * q2), re(q2 * q1)), 1e-12);
    out.check(rel_err(re(q1), re(conj(q1))), 1e-12);
    return out;
}

TrialOutcome scalar_conj_sum(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q = random_dq(seed);
    const DualQuaternion s = q + conj(q);
    out.check(std::max({std::abs(s.s.x), std::abs(s.s.y), std::abs(s.s.z),
                        std::abs(s.d.x), std::abs(s.d.y), std::abs(s.d.z)}),
              1e-12);
    return out;
}

TrialOutcome scalar_mag_mult(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q1 = random_dq(seed);
    const DualQuaternion q2 = random_dq(splitmix64(seed + 1));
    out.check(rel_err(magnitude(q1 * q2), magnitude(q1) * magnitude(q2)), 1e-9);
    return out;
}

TrialOutcome scalar_triangle(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q1 = random_dq(seed);
    const DualQuaternion q2 = random_dq(splitmix64(seed + 1));
    out.check(order_violation(magnitude(q1 + q2), magnitude(q1) + magnitude(q2), 1e-12),
              0.0);
    return out;
}

TrialOutcome scalar_assoc_dist(int, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion q1 = random_dq(seed);
    const DualQuaternion q2 = random_dq(splitmix64(seed + 1));
    const DualQuaternion q3 = random_dq(splitmix64(seed + 2));
    out.check(rel_err((q1 * q2) * q3, q1 * (q2 * q3)), 1e-12);
    out.check(rel_err(q1 * (q2 + q3), q1 * q2 + q1 * q3), 1e-12);
    return out;
}

// ---------------------------------------------------------------------------
// Determinant lemmas and theorems.

// One cycle of a Hermitian matrix: the sum of a cycle product and its
// reversal is unchanged by rotating the cycle to any starting point.
TrialOutcome cycle_identity(int n, uint64_t seed) {
    TrialOutcome out;
    if (n < 2) return out;
    const DQMatrix a = random_hermitian(n, seed);
    uint64_t st = splitmix64(seed + 99);

    // Random cycle of length >= 2 over distinct indices 1..n.
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (size_t i = pool.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(uniform01(st) * static_cast<double>(i));
        std::swap(pool[i - 1], pool[std::min(j, i - 1)]);
    }
    const int len = 2 + static_cast<int>(uniform01(st) * static_cast<double>(n - 1));
    std::vector<int> cyc(pool.begin(), pool.begin() + std::min(len, n));
    const int m = static_cast<int>(cyc.size());
    // Split (p_1..p_s k q_1..q_t) with s >= 1.
    const int kp = 1 + static_cast<int>(uniform01(st) * static_cast<double>(m - 1));
    const int kpos = std::min(kp, m - 1);

    auto product = [&](const std::vector<int>& c) {
        return cycle_product(a, std::span<const int>(c));
    };
    std::vector<int> p(cyc.begin(), cyc.begin() + kpos);
    const int k = cyc[static_cast<size_t>(kpos)];
    std::vector<int> q(cyc.begin() + kpos + 1, cyc.end());

    std::vector<int> sigma = cyc;
    std::vector<int> sigma_bar;          // (p1 q_t..q_1 k p_s..p_2)
    sigma_bar.push_back(p[0]);
    for (size_t i = q.size(); i-- > 0;) sigma_bar.push_back(q[i]);
    sigma_bar.push_back(k);
    for (size_t i = p.size(); i-- > 1;) sigma_bar.push_back(p[i]);
    std::vector<int> sigma_plus;         // (k q_1..q_t p_1..p_s)
    sigma_plus.push_back(k);
    sigma_plus.insert(sigma_plus.end(), q.begin(), q.end());
    sigma_plus.insert(sigma_plus.end(), p.begin(), p.end());
    std::vector<int> sigma_bar_plus;     // (k p_s..p_2 p_1 q_t..q_1)
    sigma_bar_plus.push_back(k);
    for (size_t i = p.size(); i-- > 1;) sigma_bar_plus.push_back(p[i]);
    sigma_bar_plus.push_back(p[0]);
    for (size_t i = q.size(); i-- > 0;) sigma_bar_plus.push_back(q[i]);

    out.check(rel_err(product(sigma) + product(sigma_bar),
                      product(sigma_plus) + product(sigma_bar_plus)),
              1e-10);
    return out;
}

TrialOutcome switch_congruence(int n, uint64_t seed) {
    TrialOutcome out;
    if (n < 2) return out;
    const DQMatrix a = random_hermitian(n, seed);
    uint64_t st = splitmix64(seed + 7);
    const int i = 1 + static_cast<int>(uniform01(st) * n) % n;
    int j = 1 + static_cast<int>(uniform01(st) * n) % n;
    if (j == i) j = (j % n) + 1;
    const DQMatrix p = switching_matrix(n, i, j);
    out.check(rel_err(chen_det(congruence(p, a)).value, chen_det(a).value), 1e-9);
    return out;
}

TrialOutcome scale_row(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const DualQuaternion alpha = random_dq(splitmix64(seed + 13));
    const DualQuaternion base = chen_det(a).value;

    out.check(rel_err(chen_det(multiplication_matrix(n, n, alpha) * a).value,
                      alpha * base),
              1e-9);
    out.check(rel_err(chen_det(a * multiplication_matrix(n, n, alpha)).value,
                      base * alpha),
              1e-9);
    for (int i = 1; i <= n; ++i) {
        const DQMatrix p = multiplication_matrix(n, i, alpha);
        out.check(rel_err(chen_det(congruence(p, a)).value,
                          conj(alpha) * alpha * base),
                  1e-9);
    }
    return out;
}

TrialOutcome duplicated_row(int n, uint64_t seed) {
    TrialOutcome out;
    if (n < 2) return out;
    const DQMatrix a = random_hermitian(n, seed);
    uint64_t st = splitmix64(seed + 17);
    const int k = 1 + static_cast<int>(uniform01(st) * (n - 1)) % (n - 1);
    const DualQuaternion alpha = random_dq(splitmix64(seed + 18));
    std::vector<DualQuaternion> row = a.row(k - 1);
    for (auto& e : row) e = alpha * e;
    const DQMatrix b = replace_row(a, n, row);
    const double scale = std::max(1.0, max_abs(b));
    out.check(max_abs(chen_det(b).value) / scale, 1e-9);
    return out;
}

TrialOutcome duplicated_col(int n, uint64_t seed) {
    TrialOutcome out;
    if (n < 2) return out;
    const DQMatrix a = random_hermitian(n, seed);
    uint64_t st = splitmix64(seed + 19);
    const int k = 1 + static_cast<int>(uniform01(st) * (n - 1)) % (n - 1);
    const DualQuaternion alpha = random_dq(splitmix64(seed + 20));
    std::vector<DualQuaternion> col = a.col(k - 1);
    for (auto& e : col) e = e * alpha;
    const DQMatrix b = replace_col(a, n, col);
    const double scale = std::max(1.0, max_abs(b));
    out.check(max_abs(chen_det(b).value) / scale, 1e-9);
    return out;
}

TrialOutcome addition_congruence(int n, uint64_t seed) {
    TrialOutcome out;
    if (n < 2) return out;
    const DQMatrix a = random_hermitian(n, seed);
    uint64_t st = splitmix64(seed + 23);
    const int i = 1 + static_cast<int>(uniform01(st) * n) % n;
    int j = 1 + static_cast<int>(uniform01(st) * n) % n;
    if (j == i) j = (j % n) + 1;
    const DualQuaternion alpha = random_dq(splitmix64(seed + 24));
    const DQMatrix p = addition_matrix(n, i, j, alpha);
    out.check(rel_err(chen_det(congruence(p, a)).value, chen_det(a).value), 1e-9);
    return out;
}

TrialOutcome unitary_reduction(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix u = random_unitary(n, seed);

    const LUFactors f = lu_partial_pivot(u);
    out.check(max_abs_diff(f.permuted(u), f.l * f.u), 1e-9);

    const DiagonalReduction red = unitary_to_diagonal(u);
    DualNumber prod{1.0};
    for (const auto& d : red.diag) prod = prod * magnitude(d);
    out.check(rel_err(prod, DualNumber{1.0}), 1e-8);

    // The recorded elementary operations really diagonalize the input.
    DQMatrix acc = u;
    for (const auto& op : red.ops) acc = op * acc;
    double offdiag = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c) offdiag = std::max(offdiag, max_abs(acc(r, c)));
    out.check(offdiag, 1e-8);
    for (int r = 0; r < n; ++r)
        out.check(max_abs(acc(r, r) - red.diag[static_cast<size_t>(r)]), 1e-8);
    return out;
}

TrialOutcome unitary_invariance(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const DQMatrix u = random_unitary(n, splitmix64(seed + 31));
    out.check(rel_err(chen_det(congruence(u, a)).value, chen_det(a).value), 1e-8);
    return out;
}

TrialOutcome eigenvalue_product(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const Spectrum spec = hermitian_eig(a);
    DualNumber prod{1.0};
    for (const auto& ev : spec.eigenvalues) prod = prod * ev;
    const DetResult cd = chen_det(a);
    if (!cd.as_dual_number) {
        out.check(1.0, 0.0);
        return out;
    }
    out.check(rel_err(prod, *cd.as_dual_number), 1e-8);
    // Cdet(A* A) = Cdet(A)^2.
    const DetResult cd2 = chen_det(conjugate_transpose(a) * a);
    if (!cd2.as_dual_number) {
        out.check(1.0, 0.0);
        return out;
    }
    out.check(rel_err(*cd2.as_dual_number,
                      (*cd.as_dual_number) * (*cd.as_dual_number)),
              1e-8);
    return out;
}

TrialOutcome cross_definition(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const DualQuaternion ref = moore_det(a).value;
    out.check(rel_err(chen_det(a).value, ref), 1e-9);
    for (int k = 1; k <= n; ++k) {
        out.check(rel_err(moore_det_dyson(a, k).value, ref), 1e-9);
        out.check(rel_err(kyrchei_det(a, KyrcheiMode::Row, k).value, ref), 1e-9);
        out.check(rel_err(kyrchei_det(a, KyrcheiMode::Column, k).value, ref), 1e-9);
    }
    return out;
}

TrialOutcome singularity_criterion(int n, uint64_t seed) {
    TrialOutcome out;
    const DualQuaternion eps = DualQuaternion::eps();
    const DualQuaternion one{1.0};

    auto classify_ok = [&](const DQMatrix& m) {
        const SingularityReport rep = singularity_classify(m);
        if (!rep.consistent) out.check(1.0, 0.0);
    };
    classify_ok(DQMatrix::diagonal({eps, one}));
    classify_ok(DQMatrix::diagonal({eps, eps}));
    classify_ok(DQMatrix::diagonal({DualQuaternion{}, one + eps}));

    // Random rank-deficient construction: U diag(0, ...) U*.
    const DQMatrix u = random_unitary(n, seed);
    uint64_t st = splitmix64(seed + 41);
    std::vector<DualQuaternion> diag(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i)
        diag[static_cast<size_t>(i)] = DualQuaternion{
            DualNumber{2.0 * uniform01(st) - 1.0, 2.0 * uniform01(st) - 1.0}};
    const DQMatrix a = u * DQMatrix::diagonal(diag) * conjugate_transpose(u);
    classify_ok(0.5 * (a + conjugate_transpose(a)));
    return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial.

DQMatrix shifted(const DQMatrix& a, const DualNumber& lambda) {
    DQMatrix m = DualQuaternion{lambda} * DQMatrix::identity(a.rows()) - a;
    return m;
}

TrialOutcome charpoly_vs_det(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const DualPolynomial p = char_poly(a);
    for (int t = 0; t <= n; ++t) {
        const DualNumber lambda{-2.0 + 4.0 * static_cast<double>(t) /
                                            static_cast<double>(std::max(n, 1))};
        const DetResult d = moore_det(shifted(a, lambda));
        if (!d.as_dual_number) {
            out.check(1.0, 0.0);
            continue;
        }
        out.check(rel_err(p.evaluate(lambda), *d.as_dual_number), 1e-8);
    }
    return out;
}

// All real roots of a polynomial with exclusively real roots, by recursive
// derivative bracketing and bisection.
std::vector<double> all_real_roots(const std::vector<double>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    auto eval = [&](double x) {
        double acc = 0.0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    if (deg == 1) return {-c[0] / c[1]};

    std::vector<double> dc(static_cast<size_t>(deg));
    for (int i = 1; i <= deg; ++i)
        dc[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * i;
    const std::vector<double> crit = all_real_roots(dc);

    double bound = 1.0;
    for (int i = 0; i < deg; ++i)
        bound = std::max(bound, std::abs(c[static_cast<size_t>(i)] /
                                         c[static_cast<size_t>(deg)]));
    bound = 1.0 + bound;

    std::vector<double> pts{-bound};
    pts.insert(pts.end(), crit.begin(), crit.end());
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());

    std::vector<double> roots;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        double flo = eval(lo), fhi = eval(hi);
        if (flo == 0.0) { roots.push_back(lo); continue; }
        if (flo * fhi > 0.0) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = eval(mid);
            if (fm == 0.0 || hi - lo < 1e-14 * std::max(1.0, std::abs(mid))) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) { hi = mid; fhi = fm; } else { lo = mid; flo = fm; }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                roots.end());
    return roots;
}

TrialOutcome charpoly_roots(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const Spectrum spec = hermitian_eig(a);

    // Simple-spectrum case: recover the roots independently and compare.
    double min_gap = 1e30;
    for (size_t i = 0; i + 1 < spec.eigenvalues.size(); ++i)
        min_gap = std::min(min_gap, std::abs(spec.eigenvalues[i].s -
                                             spec.eigenvalues[i + 1].s));
    if (n >= 2 && min_gap > 1e-3) {
        const DualPolynomial p = char_poly(a);
        std::vector<double> ps(p.coefficients.size()), pd(p.coefficients.size());
        for (size_t i = 0; i < p.coefficients.size(); ++i) {
            ps[i] = p.coefficients[i].s;
            pd[i] = p.coefficients[i].d;
        }
        const std::vector<double> roots = all_real_roots(ps);
        if (static_cast<int>(roots.size()) != n) {
            out.check(1.0, 0.0);
        } else {
            auto eval = [](const std::vector<double>& c, double x) {
                double acc = 0.0;
                for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
                return acc;
            };
            std::vector<double> dps(ps.size() - 1);
            for (size_t i = 1; i < ps.size(); ++i)
                dps[i - 1] = ps[i] * static_cast<double>(i);
            std::vector<DualNumber> recovered;
            for (double r : roots)
                recovered.push_back({r, -eval(pd, r) / eval(dps, r)});
            std::sort(recovered.begin(), recovered.end(),
                      [](const DualNumber& x, const DualNumber& y) { return x > y; });
            for (int i = 0; i < n; ++i)
                out.check(rel_err(recovered[static_cast<size_t>(i)],
                                  spec.eigenvalues[static_cast<size_t>(i)]),
                          1e-7);
        }
    }

    // Repeated-standard-eigenvalue counterexample: diag(1+eps, 1-eps) has
    // characteristic polynomial (x-1)^2, so 1 + 5eps is a root but not an
    // eigenvalue.
    const DQMatrix m = DQMatrix::diagonal(
        {DualQuaternion{DualNumber{1.0, 1.0}}, DualQuaternion{DualNumber{1.0, -1.0}}});
    const DualPolynomial pm = char_poly(m);
    const DualNumber probe{1.0, 5.0};
    out.check(std::max(std::abs(pm.evaluate(probe).s), std::abs(pm.evaluate(probe).d)),
              1e-10);
    const Spectrum sm = hermitian_eig(m);
    bool is_eigenvalue = false;
    for (const auto& ev : sm.eigenvalues)
        if (rel_err(ev, probe) < 1e-6) is_eigenvalue = true;
    if (is_eigenvalue) out.check(1.0, 0.0);
    return out;
}

TrialOutcome quasi_charpoly(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const DualPolynomial p = char_poly(a);
    const Spectrum spec = hermitian_eig(a);
    uint64_t st = splitmix64(seed + 47);
    for (int t = 0; t < 10; ++t) {
        const DualNumber lambda{4.0 * uniform01(st) - 2.0, 2.0 * uniform01(st) - 1.0};
        DualNumber prod{1.0};
        for (const auto& ev : spec.eigenvalues) {
            const DualNumber diff = lambda - ev;
            const DualNumber m = magnitude(DualQuaternion{diff});
            prod = prod * (m * m);
        }
        out.check(rel_err(quasi_char_poly_eval(p, lambda), prod), 1e-8);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oracle agreement.

TrialOutcome oracle_det(int n, uint64_t seed) {
    TrialOutcome out;
    const int m = std::min(n, 5);
    const DQMatrix a = random_hermitian(m, seed);
    out.check(rel_err(oracle::brute_moore_det(a), moore_det(a).value), 1e-10);
    out.check(rel_err(oracle::brute_chen_det(a), chen_det(a).value), 1e-10);
    for (int k = 1; k <= m; ++k) {
        out.check(rel_err(oracle::brute_kyrchei_det(a, KyrcheiMode::Row, k),
                          kyrchei_det(a, KyrcheiMode::Row, k).value),
                  1e-10);
        out.check(rel_err(oracle::brute_kyrchei_det(a, KyrcheiMode::Column, k),
                          kyrchei_det(a, KyrcheiMode::Column, k).value),
                  1e-10);
        out.check(rel_err(moore_det_dyson(a, k).value, moore_det(a).value), 1e-10);
    }
    return out;
}

TrialOutcome oracle_eig(int n, uint64_t seed) {
    TrialOutcome out;
    const DQMatrix a = random_hermitian(n, seed);
    const QMatrix as = a.standard();
    const oracle::ComplexEig ceig = oracle::hermitian_complex_eig(oracle::complex_adjoint(as));
    const double scale = std::max(1.0, max_abs(as));

    // Even multiplicity: adjoint eigenvalues come in equal pairs.
    std::vector<double> paired;
    for (size_t i = 0; i + 1 < ceig.values.size(); i += 2) {
        out.check(std::abs(ceig.values[i] - ceig.values[i + 1]) / scale, 1e-8);
        paired.push_back(0.5 * (ceig.values[i] + ceig.values[i + 1]));
    }

    const Spectrum spec = hermitian_eig(a);
    for (int i = 0; i < n; ++i)
        out.check(std::abs(spec.eigenvalues[static_cast<size_t>(i)].s -
                           paired[static_cast<size_t>(i)]) /
                      scale,
                  1e-8);
    return out;
}

TrialOutcome classical_reduction(int n, uint64_t seed) {
    TrialOutcome out;
    const int m = std::min(n, 6);
    uint64_t st = splitmix64(seed + 53);
    std::vector<std::vector<double>> r(static_cast<size_t>(m),
                                       std::vector<double>(static_cast<size_t>(m)));
    DQMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const double v = 2.0 * uniform01(st) - 1.0;
            r[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            r[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            a(i, j) = DualQuaternion{v};
            a(j, i) = DualQuaternion{v};
        }
    const DetResult d = moore_det(a);
    if (!d.as_dual_number) {
        out.check(1.0, 0.0);
        return out;
    }
    const double ref = oracle::real_cofactor_det(r);
    const double scale = std::max(1.0, std::abs(ref));
    out.check(std::abs(d.as_dual_number->s - ref) / scale, 1e-9);
    out.check(std::abs(d.as_dual_number->d) / scale, 1e-9);
    return out;
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"prop-2.1-re-bound",
         "The real part of a dual quaternion never exceeds its magnitude; "
         "equality holds exactly for nonnegative dual numbers.",
         scalar_re_bound},
        {"prop-2.1-re-cyclic",
         "The real part of a product is invariant under swapping the factors, "
         "and conjugation preserves the real part.",
         scalar_re_cyclic},
        {"prop-2.1-conj-sum",
         "A dual quaternion plus its conjugate is a dual number.",
         scalar_conj_sum},
        {"prop-2.1-mag-mult",
         "The magnitude of a product equals the product of magnitudes.",
         scalar_mag_mult},
        {"prop-2.1-triangle",
         "Magnitudes satisfy the triangle inequality under the lexicographic "
         "dual-number order.",
         scalar_triangle},
        {"scalar-assoc-dist",
         "Dual quaternion multiplication is associative and distributes over "
         "addition.",
         scalar_assoc_dist},
        {"lemma-3.1",
         "For a Hermitian matrix, the sum of a cycle product and its reversal "
         "is unchanged when the cycle is rotated to a different start.",
         cycle_identity},
        {"lemma-3.2",
         "The Chen determinant is invariant under congruence by a row-switching "
         "matrix.",
         switch_congruence},
        {"lemma-3.3",
         "Scaling the last row (or column) scales the Chen determinant by the "
         "same factor; scaling congruence multiplies it by conj(a)*a.",
         scale_row},
        {"lemma-3.4",
         "Replacing the last row with a left multiple of an earlier row makes "
         "the Chen determinant zero.",
         duplicated_row},
        {"lemma-3.5",
         "Replacing the last column with a right multiple of an earlier column "
         "makes the Chen determinant zero.",
         duplicated_col},
        {"lemma-3.6",
         "The Chen determinant is invariant under congruence by an addition "
         "matrix.",
         addition_congruence},
        {"lemma-3.7",
         "A unitary matrix reduces to diagonal form via switching and addition "
         "matrices, and the product of the diagonal magnitudes is 1.",
         unitary_reduction},
        {"thm-3.8",
         "The Chen determinant of a Hermitian matrix is invariant under unitary "
         "congruence.",
         unitary_invariance},
        {"thm-3.9",
         "The Chen determinant equals the product of the eigenvalues, and "
         "Cdet(A*A) equals Cdet(A) squared.",
         eigenvalue_product},
        {"thm-4.1",
         "Moore, Dyson-recursive, Chen, and all Kyrchei determinants agree on "
         "Hermitian matrices.",
         cross_definition},
        {"thm-4.2",
         "The Moore determinant vanishes exactly when some eigenvalue is zero "
         "or two eigenvalues have zero standard part.",
         singularity_criterion},
        {"charpoly-mdet",
         "The characteristic polynomial from the eigenvalue expansion matches "
         "the shifted Moore determinant at sample points.",
         charpoly_vs_det},
        {"cor-5.1",
         "With a simple standard spectrum the recovered polynomial roots are "
         "exactly the eigenvalues; a repeated standard eigenvalue produces a "
         "root that is not an eigenvalue.",
         charpoly_roots},
        {"quasi-charpoly",
         "The quasi characteristic polynomial equals the product of squared "
         "magnitudes of the root differences.",
         quasi_charpoly},
        {"oracle-det",
         "All determinant entry points match an independently written "
         "brute-force evaluator.",
         oracle_det},
        {"oracle-eig",
         "Complex-adjoint eigenvalues occur in equal pairs and their "
         "deduplicated list matches the standard parts of the spectrum.",
         oracle_eig},
        {"classical-reduction",
         "On real symmetric input the Moore determinant equals the classical "
         "cofactor determinant.",
         classical_reduction},
    };
    return props;
}

} // namespace

std::vector<std::string> verify_property_ids() {
    std::vector<std::string> ids;
    for (const auto& p : registry()) ids.push_back(p.id);
    return ids;
}

VerifyReport run_verify(int n, int trials, uint64_t seed, const std::string& filter,
                        int cap) {
    if (n < 1 || trials < 1)
        throw InputError("run_verify: n and trials must be positive");
    if (n > cap)
        throw SizeCapError("run_verify: n exceeds cap of " + std::to_string(cap));
    if (!filter.empty()) {
        bool found = false;
        for (const auto& p : registry())
            if (p.id == filter) found = true;
        if (!found)
            throw InputError("run_verify: unknown property id: " + filter);
    }

    VerifyReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.pass = true;

    const auto& props = registry();
    for (size_t pi = 0; pi < props.size(); ++pi) {
        const Property& prop = props[pi];
        if (!filter.empty() && prop.id != filter) continue;
        PropertyRecord rec;
        rec.id = prop.id;
        rec.description = prop.description;
        rec.trials = trials;
        rec.seed = seed;
        for (int t = 0; t < trials; ++t) {
            const TrialOutcome out = prop.run(n, trial_seed(seed, pi, t));
            rec.max_discrepancy = std::max(rec.max_discrepancy, out.discrepancy);
            if (!out.ok) ++rec.failures;
        }
        if (rec.failures > 0) report.pass = false;
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace dqlin
