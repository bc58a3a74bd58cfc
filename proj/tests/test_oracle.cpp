#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqlin/decomposition.hpp"
#include "dqlin/determinant.hpp"
#include "dqlin/oracle.hpp"

using namespace dqlin;

namespace {

const Quaternion kI{0, 1, 0, 0};
const Quaternion kJ{0, 0, 1, 0};

QMatrix qm1(const Quaternion& q) {
    QMatrix m(1, 1);
    m(0, 0) = q;
    return m;
}

QMatrix herm2_std() {
    QMatrix m(2, 2);
    m(0, 0) = Quaternion{1.0};
    m(0, 1) = kI;
    m(1, 0) = -kI;
    m(1, 1) = Quaternion{1.0};
    return m;
}

} // namespace

TEST_CASE("complex adjoint of scalars") {
    const oracle::ComplexMatrix one = oracle::complex_adjoint(qm1(Quaternion{1.0}));
    CHECK(std::abs(one.at(0, 0) - std::complex<double>{1, 0}) < 1e-15);
    CHECK(std::abs(one.at(0, 1)) < 1e-15);
    CHECK(std::abs(one.at(1, 0)) < 1e-15);
    CHECK(std::abs(one.at(1, 1) - std::complex<double>{1, 0}) < 1e-15);

    // The j unit maps to [[0, -1], [1, 0]].
    const oracle::ComplexMatrix cj = oracle::complex_adjoint(qm1(kJ));
    CHECK(std::abs(cj.at(0, 0)) < 1e-15);
    CHECK(std::abs(cj.at(0, 1) - std::complex<double>{-1, 0}) < 1e-15);
    CHECK(std::abs(cj.at(1, 0) - std::complex<double>{1, 0}) < 1e-15);
    CHECK(std::abs(cj.at(1, 1)) < 1e-15);
}

TEST_CASE("complex adjoint is multiplicative") {
    for (uint64_t s = 0; s < 30; ++s) {
        const QMatrix a = random_matrix(2, 100 + s).standard();
        const QMatrix b = random_matrix(2, 200 + s).standard();
        const oracle::ComplexMatrix lhs = oracle::complex_adjoint(a * b);
        const oracle::ComplexMatrix rhs =
            oracle::multiply(oracle::complex_adjoint(a), oracle::complex_adjoint(b));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(lhs.at(i, j) - rhs.at(i, j)) < 1e-12);
    }
}

TEST_CASE("complex Hermitian eigensolver") {
    oracle::ComplexMatrix d(2, 2);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 1.0;
    const oracle::ComplexEig de = oracle::hermitian_complex_eig(d);
    CHECK(std::abs(de.values[0] - 3.0) < 1e-12);
    CHECK(std::abs(de.values[1] - 1.0) < 1e-12);

    oracle::ComplexMatrix f(2, 2);
    f.at(0, 1) = 1.0;
    f.at(1, 0) = 1.0;
    const oracle::ComplexEig fe = oracle::hermitian_complex_eig(f);
    CHECK(std::abs(fe.values[0] - 1.0) < 1e-12);
    CHECK(std::abs(fe.values[1] + 1.0) < 1e-12);

    // Adjoint of [[1, i],[-i, 1]] has the paired spectrum {2, 2, 0, 0}.
    const oracle::ComplexEig he =
        oracle::hermitian_complex_eig(oracle::complex_adjoint(herm2_std()));
    REQUIRE(he.values.size() == 4);
    CHECK(std::abs(he.values[0] - 2.0) < 1e-10);
    CHECK(std::abs(he.values[1] - 2.0) < 1e-10);
    CHECK(std::abs(he.values[2]) < 1e-10);
    CHECK(std::abs(he.values[3]) < 1e-10);

    // Residual check: H v = lambda v for each eigenpair.
    for (uint64_t s = 0; s < 10; ++s) {
        const QMatrix as = random_hermitian(3, 300 + s).standard();
        const oracle::ComplexMatrix h = oracle::complex_adjoint(as);
        const oracle::ComplexEig e = oracle::hermitian_complex_eig(h);
        const oracle::ComplexMatrix hv = oracle::multiply(h, e.vectors);
        for (int c = 0; c < 6; ++c)
            for (int r = 0; r < 6; ++r)
                CHECK(std::abs(hv.at(r, c) -
                               e.values[static_cast<size_t>(c)] * e.vectors.at(r, c)) <
                      1e-9);
    }

    oracle::ComplexMatrix nh(2, 2);
    nh.at(0, 1) = 1.0;
    CHECK_THROWS_AS(oracle::hermitian_complex_eig(nh), DomainError);
}

TEST_CASE("adjoint eigenvalues pair up") {
    for (uint64_t s = 0; s < 20; ++s) {
        const QMatrix as = random_hermitian(4, 400 + s).standard();
        const oracle::ComplexEig e =
            oracle::hermitian_complex_eig(oracle::complex_adjoint(as));
        for (size_t i = 0; i + 1 < e.values.size(); i += 2)
            CHECK(std::abs(e.values[i] - e.values[i + 1]) < 1e-8);
    }
}

TEST_CASE("brute-force determinants agree with the library") {
    const DQMatrix id3 = DQMatrix::identity(3);
    CHECK(max_abs(oracle::brute_moore_det(id3) - DualQuaternion{1.0}) < 1e-12);
    CHECK(max_abs(oracle::brute_chen_det(id3) - DualQuaternion{1.0}) < 1e-12);
    for (int anchor = 1; anchor <= 3; ++anchor) {
        CHECK(max_abs(oracle::brute_kyrchei_det(id3, KyrcheiMode::Row, anchor) -
                      DualQuaternion{1.0}) < 1e-12);
        CHECK(max_abs(oracle::brute_kyrchei_det(id3, KyrcheiMode::Column, anchor) -
                      DualQuaternion{1.0}) < 1e-12);
    }

    // diag(1+eps, 2, 3+eps) = 6 + 8 eps
    const DQMatrix d3 = DQMatrix::diagonal({DualQuaternion{DualNumber{1, 1}},
                                            DualQuaternion{2.0},
                                            DualQuaternion{DualNumber{3, 1}}});
    const DualQuaternion bd = oracle::brute_moore_det(d3);
    CHECK(max_abs(bd - DualQuaternion{DualNumber{6, 8}}) < 1e-12);

    for (int n = 2; n <= 4; ++n)
        for (uint64_t s = 0; s < 10; ++s) {
            const DQMatrix a = random_hermitian(n, 1000 * n + s);
            CHECK(max_abs(oracle::brute_moore_det(a) - moore_det(a).value) < 1e-10);
            CHECK(max_abs(oracle::brute_chen_det(a) - chen_det(a).value) < 1e-10);
            for (int k = 1; k <= n; ++k) {
                CHECK(max_abs(oracle::brute_kyrchei_det(a, KyrcheiMode::Row, k) -
                              kyrchei_det(a, KyrcheiMode::Row, k).value) < 1e-10);
                CHECK(max_abs(oracle::brute_kyrchei_det(a, KyrcheiMode::Column, k) -
                              kyrchei_det(a, KyrcheiMode::Column, k).value) < 1e-10);
            }
        }

    CHECK_THROWS_AS(oracle::brute_moore_det(DQMatrix::identity(8)), SizeCapError);
}

TEST_CASE("oracle spectra match the library spectra") {
    for (uint64_t s = 0; s < 10; ++s) {
        const DQMatrix a = random_hermitian(3, 500 + s);
        const Spectrum spec = hermitian_eig(a);
        const oracle::ComplexEig e =
            oracle::hermitian_complex_eig(oracle::complex_adjoint(a.standard()));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(spec.eigenvalues[static_cast<size_t>(i)].s -
                           e.values[static_cast<size_t>(2 * i)]) < 1e-8);
    }
}

TEST_CASE("real cofactor determinant") {
    CHECK(std::abs(oracle::real_cofactor_det({{1.0}}) - 1.0) < 1e-15);
    CHECK(std::abs(oracle::real_cofactor_det({{1, 2}, {3, 4}}) + 2.0) < 1e-12);
    CHECK(std::abs(oracle::real_cofactor_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) - 24.0) <
          1e-12);

    // Agreement with the Moore determinant on embedded symmetric matrices.
    for (uint64_t s = 0; s < 10; ++s) {
        const DQMatrix b = random_hermitian(4, 600 + s);
        std::vector<std::vector<double>> r(4, std::vector<double>(4));
        DQMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double v = b(i, j).s.w;
                r[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                a(i, j) = DualQuaternion{v};
            }
        const DetResult d = moore_det(a);
        REQUIRE(d.as_dual_number);
        CHECK(std::abs(d.as_dual_number->s - oracle::real_cofactor_det(r)) < 1e-9);
        CHECK(std::abs(d.as_dual_number->d) < 1e-12);
    }
}
