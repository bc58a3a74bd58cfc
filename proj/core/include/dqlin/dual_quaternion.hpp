#pragma once

#include <span>
#include <vector>

#include "dqlin/dual_number.hpp"
#include "dqlin/errors.hpp"
#include "dqlin/quaternion.hpp"

namespace dqlin {

// Dual quaternion q = s + d*eps with quaternion standard and dual parts.
// eps commutes with quaternions and eps^2 = 0.
struct DualQuaternion {
    Quaternion s;
    Quaternion d;

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion& s_, const Quaternion& d_ = Quaternion{})
        : s(s_), d(d_) {}
    constexpr explicit DualQuaternion(double real) : s(real) {}
    constexpr explicit DualQuaternion(const DualNumber& a)
        : s(a.s), d(a.d) {}

    static constexpr DualQuaternion eps() { return {Quaternion{}, Quaternion{1.0}}; }

    constexpr DualQuaternion& operator+=(const DualQuaternion& o) {
        s += o.s; d += o.d;
        return *this;
    }
    constexpr DualQuaternion& operator-=(const DualQuaternion& o) {
        s -= o.s; d -= o.d;
        return *this;
    }
};

constexpr DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
constexpr DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
constexpr DualQuaternion operator-(const DualQuaternion& a) { return {-a.s, -a.d}; }

// (a_s + a_d eps)(b_s + b_d eps) = a_s b_s + (a_s b_d + a_d b_s) eps.
constexpr DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.s * b.s, a.s * b.d + a.d * b.s};
}
constexpr DualQuaternion operator*(double c, const DualQuaternion& a) { return {c * a.s, c * a.d}; }
constexpr DualQuaternion operator*(const DualQuaternion& a, double c) { return c * a; }
constexpr DualQuaternion operator*(const DualNumber& c, const DualQuaternion& a) {
    return DualQuaternion(c) * a;
}

constexpr DualQuaternion conj(const DualQuaternion& q) { return {conj(q.s), conj(q.d)}; }

constexpr DualNumber re(const DualQuaternion& q) { return {q.s.w, q.d.w}; }

inline double max_abs(const DualQuaternion& q) {
    return std::max(max_abs(q.s), max_abs(q.d));
}

inline bool is_zero(const DualQuaternion& q, double tol = kZeroTol) {
    return max_abs(q) <= tol;
}

// A dual quaternion is appreciable when its standard part is nonzero.
inline bool appreciable(const DualQuaternion& q, double tol = kZeroTol) {
    return !is_zero(q.s, tol);
}

inline bool is_dual_number(const DualQuaternion& q, double tol = kZeroTol) {
    return std::max({std::abs(q.s.x), std::abs(q.s.y), std::abs(q.s.z),
                     std::abs(q.d.x), std::abs(q.d.y), std::abs(q.d.z)}) <= tol;
}

inline DualNumber to_dual_number(const DualQuaternion& q) { return {q.s.w, q.d.w}; }

// |p| = |p_s| + (p_s* p_d + p_d* p_s) / (2 |p_s|) eps when p is
// appreciable, and |p_d| eps otherwise.  Always a nonnegative dual number.
inline DualNumber magnitude(const DualQuaternion& p) {
    if (appreciable(p)) {
        const double ns = norm(p.s);
        // p_s* p_d + p_d* p_s = 2 dot(p_s, p_d), a real number.
        return {ns, dot(p.s, p.d) / ns};
    }
    return {0.0, norm(p.d)};
}

// Inverse of an appreciable dual quaternion:
// q^{-1} = q_s^{-1} - q_s^{-1} q_d q_s^{-1} eps.
inline DualQuaternion inverse(const DualQuaternion& q) {
    if (!appreciable(q))
        throw SingularError("inverse: dual quaternion is not appreciable");
    const Quaternion si = inverse(q.s);
    return {si, -(si * q.d * si)};
}

// 2-norm of a dual quaternion vector.  Appreciable vectors take the dual
// square root of the magnitude-square sum; infinitesimal vectors reduce to
// the norm of the dual part times eps.
inline DualNumber vector_norm2(std::span<const DualQuaternion> x) {
    bool vec_appreciable = false;
    for (const auto& xi : x)
        if (!is_zero(xi.s)) { vec_appreciable = true; break; }
    if (vec_appreciable) {
        DualNumber sum;
        for (const auto& xi : x) {
            const DualNumber m = magnitude(xi);
            sum = sum + m * m;
        }
        return dual_sqrt(sum);
    }
    double sum_d = 0.0;
    for (const auto& xi : x) sum_d += norm_sq(xi.d);
    return {0.0, std::sqrt(sum_d)};
}

inline DualNumber vector_norm2(const std::vector<DualQuaternion>& x) {
    return vector_norm2(std::span<const DualQuaternion>(x));
}

} // namespace dqlin
