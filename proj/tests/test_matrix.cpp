#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqlin/matrix.hpp"

using namespace dqlin;

namespace {

const Quaternion kI{0, 1, 0, 0};
const Quaternion kJ{0, 0, 1, 0};

DQMatrix herm2() {
    // [[1, i], [-i, 1]]
    DQMatrix a(2, 2);
    a(0, 0) = DualQuaternion{1.0};
    a(0, 1) = DualQuaternion{kI};
    a(1, 0) = DualQuaternion{-kI};
    a(1, 1) = DualQuaternion{1.0};
    return a;
}

} // namespace

TEST_CASE("conjugate transpose") {
    const DQMatrix id = DQMatrix::identity(3);
    CHECK(max_abs_diff(conjugate_transpose(id), id) == 0.0);

    DQMatrix a(2, 2);
    a(0, 1) = DualQuaternion{kI};
    const DQMatrix at = conjugate_transpose(a);
    CHECK(max_abs(at(0, 1)) == 0.0);
    CHECK(max_abs(at(1, 0) - DualQuaternion{-kI}) == 0.0);

    for (uint64_t s = 0; s < 20; ++s) {
        const DQMatrix p = random_matrix(3, 2000 + s);
        const DQMatrix q = random_matrix(3, 3000 + s);
        CHECK(max_abs_diff(conjugate_transpose(p * q),
                           conjugate_transpose(q) * conjugate_transpose(p)) < 1e-12);
        CHECK(max_abs_diff(conjugate_transpose(conjugate_transpose(p)), p) == 0.0);
    }
}

TEST_CASE("matrix product") {
    const DQMatrix a = random_matrix(3, 42);
    CHECK(max_abs_diff(a * DQMatrix::identity(3), a) == 0.0);

    const DQMatrix p12 = switching_matrix(2, 1, 2);
    CHECK(max_abs_diff(p12 * p12, DQMatrix::identity(2)) == 0.0);

    // (eps B)(eps C) = 0
    const DQMatrix b = DualQuaternion::eps() * random_matrix(3, 7);
    const DQMatrix c = DualQuaternion::eps() * random_matrix(3, 8);
    CHECK(max_abs(b * c) == 0.0);

    DQMatrix bad(2, 3);
    CHECK_THROWS_AS(bad * bad, InputError);
}

TEST_CASE("classify") {
    const HermitianTag id_tag = classify(DQMatrix::identity(3));
    CHECK(id_tag.kind == HermitianKind::Hermitian);
    CHECK(id_tag.unitary);

    CHECK(classify(herm2()).kind == HermitianKind::Hermitian);

    // [[1, j],[0, 1]] is almost Hermitian; the smallest valid k is reported.
    DQMatrix almost(2, 2);
    almost(0, 0) = DualQuaternion{1.0};
    almost(0, 1) = DualQuaternion{kJ};
    almost(1, 1) = DualQuaternion{1.0};
    const HermitianTag tag = classify(almost);
    CHECK(tag.kind == HermitianKind::AlmostHermitian);
    CHECK(tag.k == 1);

    const HermitianTag gen = classify(random_matrix(3, 99));
    CHECK(gen.kind == HermitianKind::General);

    CHECK_THROWS_AS(classify(DQMatrix(2, 3)), InputError);
}

TEST_CASE("elementary matrices") {
    const DQMatrix sw = switching_matrix(2, 1, 2);
    CHECK(max_abs(sw(0, 0)) == 0.0);
    CHECK(max_abs(sw(0, 1) - DualQuaternion{1.0}) == 0.0);
    CHECK(max_abs(sw(1, 0) - DualQuaternion{1.0}) == 0.0);

    const DualQuaternion c{Quaternion{2, 1, 0, 0}, Quaternion{0, 0, 1, 0}};
    const DQMatrix sc = multiplication_matrix(2, 2, c);
    CHECK(max_abs(sc(0, 0) - DualQuaternion{1.0}) == 0.0);
    CHECK(max_abs(sc(1, 1) - c) == 0.0);

    // add(1,2,c): entry c at row 2, column 1; left multiplication adds
    // c times row 1 to row 2.
    const DQMatrix ad = addition_matrix(2, 1, 2, c);
    CHECK(max_abs(ad(1, 0) - c) == 0.0);
    CHECK(max_abs(ad(0, 1)) == 0.0);

    CHECK_THROWS_AS(switching_matrix(2, 1, 3), InputError);
    CHECK_THROWS_AS(addition_matrix(3, 2, 2, c), InputError);
}

TEST_CASE("elementary inverses") {
    const DualQuaternion c{Quaternion{0.5, -1, 2, 0.3}, Quaternion{1, 0, 0, -2}};
    const DQMatrix sw = switching_matrix(4, 2, 4);
    CHECK(max_abs_diff(sw * sw, DQMatrix::identity(4)) == 0.0);
    const DQMatrix ad = addition_matrix(4, 1, 3, c);
    const DQMatrix ad_inv = addition_matrix(4, 1, 3, -c);
    CHECK(max_abs_diff(ad * ad_inv, DQMatrix::identity(4)) < 1e-14);
}

TEST_CASE("congruence preserves hermiticity") {
    for (uint64_t s = 0; s < 10; ++s) {
        const DQMatrix a = random_hermitian(4, 5000 + s);
        const DQMatrix p1 = switching_matrix(4, 1, 3);
        CHECK(is_hermitian(congruence(p1, a), 1e-12));
        const DualQuaternion c = random_matrix(1, 6000 + s)(0, 0);
        const DQMatrix p2 = addition_matrix(4, 2, 4, c);
        CHECK(is_hermitian(congruence(p2, a), 1e-10));
    }
}

TEST_CASE("row and column replacement") {
    const DQMatrix id = DQMatrix::identity(2);
    CHECK(max_abs_diff(replace_row(id, 1, id.row(0)), id) == 0.0);

    const DQMatrix r = replace_col(id, 2, {DualQuaternion{kI}, DualQuaternion{kJ}});
    CHECK(max_abs(r(0, 1) - DualQuaternion{kI}) == 0.0);
    CHECK(max_abs(r(1, 1) - DualQuaternion{kJ}) == 0.0);
    CHECK(max_abs(r(0, 0) - DualQuaternion{1.0}) == 0.0);

    CHECK_THROWS_AS(replace_row(id, 3, id.row(0)), InputError);
    CHECK_THROWS_AS(replace_row(id, 1, std::vector<DualQuaternion>(3)), InputError);

    // A Hermitian matrix with one replaced row classifies as almost
    // Hermitian at that row.
    const DQMatrix a = random_hermitian(3, 77);
    const DQMatrix b = replace_row(a, 2, random_matrix(3, 78).row(0));
    const HermitianTag tag = classify(b);
    CHECK(tag.kind == HermitianKind::AlmostHermitian);
    CHECK(tag.k == 2);
}

TEST_CASE("minor") {
    CHECK(max_abs_diff(minor(DQMatrix::identity(3), 1, 1), DQMatrix::identity(2)) == 0.0);

    DQMatrix m(2, 2);
    m(0, 0) = DualQuaternion{1.0};
    m(0, 1) = DualQuaternion{2.0};
    m(1, 0) = DualQuaternion{3.0};
    m(1, 1) = DualQuaternion{4.0};
    const DQMatrix mm = minor(m, 1, 2);
    CHECK(mm.rows() == 1);
    CHECK(max_abs(mm(0, 0) - DualQuaternion{3.0}) == 0.0);

    CHECK_THROWS_AS(minor(DQMatrix::identity(1), 1, 1), InputError);

    // Principal minors of Hermitian matrices are Hermitian.
    const DQMatrix a = random_hermitian(4, 11);
    for (int k = 1; k <= 4; ++k)
        CHECK(classify(minor(a, k, k)).kind == HermitianKind::Hermitian);
}

TEST_CASE("random hermitian") {
    const DQMatrix a = random_hermitian(4, 7);
    const DQMatrix b = random_hermitian(4, 7);
    CHECK(max_abs_diff(a, b) == 0.0);  // deterministic per seed
    CHECK(is_hermitian(a, 1e-12));
    CHECK(max_abs_diff(a, random_hermitian(4, 8)) > 1e-3);

    const DQMatrix one = random_hermitian(1, 3);
    CHECK(is_dual_number(one(0, 0), 1e-12));
}

TEST_CASE("random unitary") {
    for (uint64_t s = 0; s < 10; ++s) {
        for (int n : {1, 2, 3, 4}) {
            const DQMatrix u = random_unitary(n, 9000 + s);
            CHECK(max_abs_diff(conjugate_transpose(u) * u, DQMatrix::identity(n)) < 1e-10);
            for (int j = 0; j < n; ++j) {
                const DualNumber nrm = vector_norm2(u.col(j));
                CHECK(std::abs(nrm.s - 1.0) < 1e-10);
                CHECK(std::abs(nrm.d) < 1e-10);
            }
        }
    }
}

TEST_CASE("gram-schmidt") {
    const QMatrix q = gram_schmidt(random_matrix(4, 123).standard());
    const QMatrix g = adjoint(q) * q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Quaternion expect = (i == j) ? Quaternion{1.0} : Quaternion{};
            CHECK(max_abs(g(i, j) - expect) < 1e-12);
        }
    // Breakdown on dependent columns.
    QMatrix dep(2, 2);
    dep(0, 0) = Quaternion{1.0};
    dep(0, 1) = Quaternion{2.0};
    dep(1, 0) = Quaternion{1.0};
    dep(1, 1) = Quaternion{2.0};
    CHECK_THROWS_AS(gram_schmidt(dep), ConvergenceError);
}
