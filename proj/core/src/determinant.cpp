#include "dqlin/determinant.hpp"

#include <cmath>
#include <unordered_map>

#include "dqlin/decomposition.hpp"

namespace dqlin {

std::string det_definition_name(DetDefinition def) {
    switch (def) {
        case DetDefinition::Moore: return "moore";
        case DetDefinition::MooreDyson: return "dyson";
        case DetDefinition::Chen: return "chen";
        case DetDefinition::KyrcheiRow: return "krow";
        case DetDefinition::KyrcheiCol: return "kcol";
        case DetDefinition::Quasi: return "quasi";
    }
    return "unknown";
}

namespace {

void check_square(const DQMatrix& a, const char* what) {
    if (!a.square())
        throw InputError(std::string(what) + ": matrix is not square");
}

void check_cap(const DQMatrix& a, int cap, const char* what) {
    if (a.rows() > cap)
        throw SizeCapError(std::string(what) + ": size exceeds cap of " +
                           std::to_string(cap));
}

std::optional<DualNumber> reduce_to_dual(const DualQuaternion& v) {
    const double tol = 1e-8 * std::max(1.0, max_abs(v));
    if (is_dual_number(v, tol)) return to_dual_number(v);
    return std::nullopt;
}

DetResult sum_over(const DQMatrix& a, const std::vector<CycleDecomposition>& decs,
                   DetDefinition def) {
    DualQuaternion total;
    for (const auto& dec : decs) {
        const DualQuaternion term = cycle_value(a, dec);
        total += (sign(dec) > 0) ? term : -term;
    }
    DetResult r;
    r.value = total;
    r.as_dual_number = reduce_to_dual(total);
    r.definition = def;
    r.term_count = static_cast<long>(decs.size());
    return r;
}

} // namespace

DualQuaternion cycle_product(const DQMatrix& a, std::span<const int> cycle) {
    const size_t k = cycle.size();
    DualQuaternion prod = a(cycle[0] - 1, cycle[(1) % k] - 1);
    for (size_t i = 1; i < k; ++i)
        prod = prod * a(cycle[i] - 1, cycle[(i + 1) % k] - 1);
    return prod;
}

DualQuaternion cycle_value(const DQMatrix& a, const CycleDecomposition& dec) {
    if (dec.n != a.rows() || !a.square())
        throw InputError("cycle_value: decomposition size does not match matrix");
    DualQuaternion prod{1.0};
    for (const auto& cycle : dec.cycles)
        prod = prod * cycle_product(a, cycle);
    return prod;
}

DetResult moore_det(const DQMatrix& a, int cap) {
    check_square(a, "moore_det");
    check_cap(a, cap, "moore_det");
    return sum_over(a, enumerate_moore(a.rows(), cap), DetDefinition::Moore);
}

DetResult chen_det(const DQMatrix& a, int cap) {
    check_square(a, "chen_det");
    check_cap(a, cap, "chen_det");
    return sum_over(a, enumerate_chen(a.rows(), cap), DetDefinition::Chen);
}

DetResult kyrchei_det(const DQMatrix& a, KyrcheiMode mode, int anchor, int cap) {
    check_square(a, "kyrchei_det");
    check_cap(a, cap, "kyrchei_det");
    if (anchor < 1 || anchor > a.rows())
        throw InputError("kyrchei_det: anchor out of range");
    const DetDefinition def = mode == KyrcheiMode::Row ? DetDefinition::KyrcheiRow
                                                       : DetDefinition::KyrcheiCol;
    return sum_over(a, enumerate_kyrchei(a.rows(), mode, anchor, cap), def);
}

namespace {

// Memoized Dyson recursion over index subsets of the original matrix.
//
// M(S)       = Mdet of the Hermitian principal submatrix A[S,S]
// D(S, j, k) = Mdet of A[S,S] with column j replaced by column k of A,
//              for k outside S (a j-almost-Hermitian matrix).
//
// Expanding along the pivot row gives
//   M(S)      = a_pp M(S\p) - sum_{i in S\p} a_pi D(S\p, i, p)
//   D(S,j,k)  = a_jk M(S\j) - sum_{m in S\j} a_jm D(S\j, m, k)
// with M({i}) = a_ii and D({j},j,k) = a_jk.
class DysonEvaluator {
public:
    explicit DysonEvaluator(const DQMatrix& a) : a_(a) {}

    DualQuaternion hermitian_part(uint32_t mask, int pivot) {
        ++nodes_;
        const uint32_t rest = mask & ~bit(pivot);
        if (rest == 0) return a_(pivot, pivot);
        DualQuaternion total = a_(pivot, pivot) * hermitian_memo(rest);
        for (int i = 0; i < a_.rows(); ++i)
            if (rest & bit(i))
                total -= a_(pivot, i) * replaced(rest, i, pivot);
        return total;
    }

    long nodes() const { return nodes_; }

private:
    static uint32_t bit(int i) { return 1u << i; }

    DualQuaternion hermitian_memo(uint32_t mask) {
        auto it = m_memo_.find(mask);
        if (it != m_memo_.end()) return it->second;
        const int pivot = lowest(mask);
        const DualQuaternion v = hermitian_part(mask, pivot);
        m_memo_.emplace(mask, v);
        return v;
    }

    DualQuaternion replaced(uint32_t mask, int j, int k) {
        const uint64_t key = (static_cast<uint64_t>(mask) << 16) |
                             (static_cast<uint64_t>(j) << 8) | static_cast<uint64_t>(k);
        auto it = d_memo_.find(key);
        if (it != d_memo_.end()) return it->second;
        ++nodes_;
        const uint32_t rest = mask & ~bit(j);
        DualQuaternion v;
        if (rest == 0) {
            v = a_(j, k);
        } else {
            v = a_(j, k) * hermitian_memo(rest);
            for (int m = 0; m < a_.rows(); ++m)
                if (rest & bit(m))
                    v -= a_(j, m) * replaced(rest, m, k);
        }
        d_memo_.emplace(key, v);
        return v;
    }

    static int lowest(uint32_t mask) {
        int i = 0;
        while (!(mask & (1u << i))) ++i;
        return i;
    }

    const DQMatrix& a_;
    std::unordered_map<uint32_t, DualQuaternion> m_memo_;
    std::unordered_map<uint64_t, DualQuaternion> d_memo_;
    long nodes_ = 0;
};

} // namespace

DetResult moore_det_dyson(const DQMatrix& a, int k, int cap) {
    check_square(a, "moore_det_dyson");
    check_cap(a, cap, "moore_det_dyson");
    const int n = a.rows();
    if (k < 1 || k > n)
        throw InputError("moore_det_dyson: k out of range");
    const double tol = 1e-8 * std::max(1.0, max_abs(a));
    if (!is_hermitian(a, tol) && !is_almost_hermitian_at(a, k, tol))
        throw DomainError("moore_det_dyson: matrix is neither Hermitian nor "
                          "k-almost-Hermitian at the given k");

    DysonEvaluator eval(a);
    const uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    const DualQuaternion value = eval.hermitian_part(full, k - 1);

    DetResult r;
    r.value = value;
    r.as_dual_number = reduce_to_dual(value);
    r.definition = DetDefinition::MooreDyson;
    r.term_count = eval.nodes();
    return r;
}

DualNumber quasi_det(const DQMatrix& a) {
    check_square(a, "quasi_det");
    const LUFactors lu = lu_partial_pivot(a);
    DualNumber prod{1.0};
    for (int i = 0; i < a.rows(); ++i) {
        const DualNumber m = magnitude(lu.u(i, i));
        prod = prod * (m * m);
    }
    return prod;
}

} // namespace dqlin
