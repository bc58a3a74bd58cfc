#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqlin/dual_quaternion.hpp"
#include "dqlin/matrix.hpp"

using namespace dqlin;

namespace {

const Quaternion kI{0, 1, 0, 0};
const Quaternion kJ{0, 0, 1, 0};
const Quaternion kK{0, 0, 0, 1};

bool quat_close(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    return max_abs(a - b) <= tol;
}

bool dq_close(const DualQuaternion& a, const DualQuaternion& b, double tol = 1e-12) {
    return max_abs(a - b) <= tol;
}

bool dn_close(const DualNumber& a, const DualNumber& b, double tol = 1e-12) {
    return std::abs(a.s - b.s) <= tol && std::abs(a.d - b.d) <= tol;
}

DualQuaternion rand_dq(uint64_t seed) { return random_matrix(1, seed)(0, 0); }

} // namespace

TEST_CASE("quaternion products") {
    CHECK(quat_close(kI * kJ, kK));
    CHECK(quat_close(kJ * kI, -kK));
    CHECK(quat_close(kI * kI, Quaternion{-1.0}));
    CHECK(quat_close(kJ * kJ, Quaternion{-1.0}));
    CHECK(quat_close(kK * kK, Quaternion{-1.0}));

    const Quaternion q{0.3, -1.2, 0.7, 2.0};
    CHECK(quat_close(Quaternion{1.0} * q, q));
    CHECK(quat_close(q * Quaternion{1.0}, q));

    // (1+i)(1+j) = 1 + i + j + k
    CHECK(quat_close((Quaternion{1.0} + kI) * (Quaternion{1.0} + kJ),
                     Quaternion{1, 1, 1, 1}));
}

TEST_CASE("quaternion conjugation and norm") {
    const Quaternion q{0.5, -2, 3, 1.5};
    CHECK(quat_close(conj(conj(q)), q));
    CHECK(std::abs(norm_sq(q) - re(q * conj(q))) < 1e-12);
    CHECK(std::abs(norm_sq(q) - re(conj(q) * q)) < 1e-12);
    CHECK(quat_close(q * inverse(q), Quaternion{1.0}));
}

TEST_CASE("dual quaternion multiplication") {
    const DualQuaternion ei{Quaternion{}, kI};
    const DualQuaternion ej{Quaternion{}, kJ};
    CHECK(dq_close(ei * ej, DualQuaternion{}));  // eps^2 = 0

    const DualQuaternion one_plus{DualNumber{1.0, 1.0}};
    const DualQuaternion one_minus{DualNumber{1.0, -1.0}};
    CHECK(dq_close(one_plus * one_minus, DualQuaternion{1.0}));

    // (i + eps j)(j + eps i) = k - 2 eps
    const DualQuaternion a{kI, kJ};
    const DualQuaternion b{kJ, kI};
    CHECK(dq_close(a * b, DualQuaternion{kK, Quaternion{-2.0}}));
}

TEST_CASE("dual quaternion conjugation") {
    const DualQuaternion a{kI, kJ};
    CHECK(dq_close(conj(a), DualQuaternion{-kI, -kJ}));
    CHECK(dq_close(conj(DualQuaternion{3.0}), DualQuaternion{3.0}));
    for (uint64_t s = 0; s < 20; ++s) {
        const DualQuaternion p = rand_dq(100 + s);
        const DualQuaternion q = rand_dq(200 + s);
        CHECK(dq_close(conj(p * q), conj(q) * conj(p)));
        CHECK(dq_close(conj(conj(p)), p));
    }
}

TEST_CASE("magnitude") {
    CHECK(dn_close(magnitude(DualQuaternion{Quaternion{}, kJ}), DualNumber{0.0, 1.0}));
    CHECK(dn_close(magnitude(DualQuaternion{1.0}), DualNumber{1.0}));
    // |(3+4i) + eps| = 5 + 0.6 eps
    const DualQuaternion p{Quaternion{3, 4, 0, 0}, Quaternion{1.0}};
    CHECK(dn_close(magnitude(p), DualNumber{5.0, 0.6}));
}

TEST_CASE("dual number order and arithmetic") {
    CHECK(dual_compare({1.0, 0.0}, {1.0, 5.0}) < 0);
    CHECK(dual_compare({2.0, -9.0}, {1.0, 9.0}) > 0);
    CHECK(dual_compare({0.0, 1.0}, {0.0, 0.0}) > 0);
    CHECK(dual_compare({1.0, 2.0}, {1.0, 2.0}) == 0);

    CHECK(dn_close(DualNumber{2, 3} * DualNumber{4, 5}, DualNumber{8, 22}));
    CHECK(dn_close(dual_sqrt({25.0, 8.0}), DualNumber{5.0, 0.8}));
    CHECK_THROWS_AS(dual_sqrt({0.0, 1.0}), DomainError);
    CHECK(dn_close(dual_inverse({2.0, 4.0}) * DualNumber{2.0, 4.0}, DualNumber{1.0}));
    CHECK_THROWS_AS(dual_inverse({0.0, 1.0}), SingularError);
}

TEST_CASE("dual quaternion inverse") {
    for (uint64_t s = 0; s < 20; ++s) {
        const DualQuaternion q = rand_dq(300 + s);
        if (!appreciable(q)) continue;
        CHECK(dq_close(q * inverse(q), DualQuaternion{1.0}, 1e-10));
        CHECK(dq_close(inverse(q) * q, DualQuaternion{1.0}, 1e-10));
    }
    CHECK_THROWS_AS(inverse(DualQuaternion::eps()), SingularError);
}

TEST_CASE("vector 2-norm") {
    CHECK(dn_close(vector_norm2({DualQuaternion{1.0}, DualQuaternion{}}),
                   DualNumber{1.0}));
    // (eps i, eps) -> sqrt(2) eps
    CHECK(dn_close(vector_norm2({DualQuaternion{Quaternion{}, kI},
                                 DualQuaternion::eps()}),
                   DualNumber{0.0, std::sqrt(2.0)}));
    // (3, 4 + eps) -> 5 + 0.8 eps
    CHECK(dn_close(vector_norm2({DualQuaternion{3.0},
                                 DualQuaternion{Quaternion{4.0}, Quaternion{1.0}}}),
                   DualNumber{5.0, 0.8}));
}

TEST_CASE("real part bounded by magnitude") {
    for (uint64_t s = 0; s < 200; ++s) {
        const DualQuaternion q = rand_dq(400 + s);
        const DualNumber r = re(q);
        const DualNumber m = magnitude(q);
        CHECK(r <= m + DualNumber{1e-12, 1e-12});
    }
    // Equality exactly for nonnegative dual numbers.
    const DualQuaternion nn{DualNumber{2.5, -0.3}};
    CHECK(dn_close(re(nn), magnitude(nn)));
}

TEST_CASE("real part is cyclic and conjugation-invariant") {
    for (uint64_t s = 0; s < 100; ++s) {
        const DualQuaternion p = rand_dq(500 + s);
        const DualQuaternion q = rand_dq(600 + s);
        CHECK(dn_close(re(p * q), re(q * p)));
        CHECK(dn_close(re(p), re(conj(p))));
        // p + p* is a dual number.
        const DualQuaternion sum = p + conj(p);
        CHECK(is_dual_number(sum, 1e-12));
    }
}

TEST_CASE("magnitude is multiplicative and subadditive") {
    for (uint64_t s = 0; s < 100; ++s) {
        const DualQuaternion p = rand_dq(700 + s);
        const DualQuaternion q = rand_dq(800 + s);
        const DualNumber lhs = magnitude(p * q);
        const DualNumber rhs = magnitude(p) * magnitude(q);
        CHECK(dn_close(lhs, rhs, 1e-9));
        CHECK(magnitude(p + q) <= magnitude(p) + magnitude(q) + DualNumber{1e-12, 1e-12});
    }
}

TEST_CASE("associativity and distributivity") {
    for (uint64_t s = 0; s < 100; ++s) {
        const DualQuaternion p = rand_dq(900 + s);
        const DualQuaternion q = rand_dq(1000 + s);
        const DualQuaternion r = rand_dq(1100 + s);
        CHECK(dq_close((p * q) * r, p * (q * r)));
        CHECK(dq_close(p * (q + r), p * q + p * r));
        CHECK(dq_close((p + q) * r, p * r + q * r));
    }
}
