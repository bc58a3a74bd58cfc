#pragma once

#include <cmath>
#include <compare>

#include "dqlin/errors.hpp"
#include "dqlin/quaternion.hpp"

namespace dqlin {

// Dual number s + d*eps with eps^2 = 0.  Ordered lexicographically:
// the standard part decides, the dual part breaks ties.  This is the
// unique ring order extending the reals with eps a positive
// infinitesimal.
struct DualNumber {
    double s = 0.0;
    double d = 0.0;

    constexpr DualNumber() = default;
    constexpr DualNumber(double s_, double d_ = 0.0) : s(s_), d(d_) {}
};

constexpr DualNumber operator+(const DualNumber& a, const DualNumber& b) {
    return {a.s + b.s, a.d + b.d};
}
constexpr DualNumber operator-(const DualNumber& a, const DualNumber& b) {
    return {a.s - b.s, a.d - b.d};
}
constexpr DualNumber operator-(const DualNumber& a) { return {-a.s, -a.d}; }

// eps^2 annihilates, so the dual-dual cross term is dropped.
constexpr DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return {a.s * b.s, a.s * b.d + a.d * b.s};
}
constexpr DualNumber operator*(double c, const DualNumber& a) { return {c * a.s, c * a.d}; }
constexpr DualNumber operator*(const DualNumber& a, double c) { return c * a; }

// Lexicographic total order.
constexpr int dual_compare(const DualNumber& a, const DualNumber& b) {
    if (a.s < b.s) return -1;
    if (a.s > b.s) return 1;
    if (a.d < b.d) return -1;
    if (a.d > b.d) return 1;
    return 0;
}

constexpr bool operator<(const DualNumber& a, const DualNumber& b) { return dual_compare(a, b) < 0; }
constexpr bool operator>(const DualNumber& a, const DualNumber& b) { return dual_compare(a, b) > 0; }
constexpr bool operator<=(const DualNumber& a, const DualNumber& b) { return dual_compare(a, b) <= 0; }
constexpr bool operator>=(const DualNumber& a, const DualNumber& b) { return dual_compare(a, b) >= 0; }

inline bool is_zero(const DualNumber& a, double tol = kZeroTol) {
    return std::abs(a.s) <= tol && std::abs(a.d) <= tol;
}

// First-order square root: (a + b eps)^(1/2) = sqrt(a) + b/(2 sqrt(a)) eps.
// Only defined for an appreciable positive standard part.
inline DualNumber dual_sqrt(const DualNumber& a) {
    if (a.s <= 0.0)
        throw DomainError("dual_sqrt: standard part must be positive");
    const double r = std::sqrt(a.s);
    return {r, a.d / (2.0 * r)};
}

inline DualNumber dual_inverse(const DualNumber& a) {
    if (std::abs(a.s) <= kZeroTol)
        throw SingularError("dual_inverse: standard part is zero");
    return {1.0 / a.s, -a.d / (a.s * a.s)};
}

} // namespace dqlin
