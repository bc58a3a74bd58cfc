#pragma once

#include <optional>
#include <span>
#include <string>

#include "dqlin/matrix.hpp"
#include "dqlin/permutation.hpp"

namespace dqlin {

// Default cap for permutation-sum determinants (8! = 40,320 terms).
inline constexpr int kDetCap = 8;

enum class DetDefinition { Moore, MooreDyson, Chen, KyrcheiRow, KyrcheiCol, Quasi };

std::string det_definition_name(DetDefinition def);

struct DetResult {
    DualQuaternion value;
    // Present when the imaginary components of `value` are negligible;
    // always present for Hermitian input.
    std::optional<DualNumber> as_dual_number;
    DetDefinition definition = DetDefinition::Moore;
    long term_count = 0;
};

// Ordered entry product over one cycle: a_{c1 c2} a_{c2 c3} ... a_{ck c1}.
DualQuaternion cycle_product(const DQMatrix& a, std::span<const int> cycle);

// Product of the per-cycle products in the listed cycle order.  The
// multiplication order is the semantics; no reordering.
DualQuaternion cycle_value(const DQMatrix& a, const CycleDecomposition& dec);

DetResult moore_det(const DQMatrix& a, int cap = kDetCap);

// Recursive expansion along row/column k (one-based).  Requires a
// Hermitian or k-almost-Hermitian matrix; for Hermitian input the value
// is independent of k.
DetResult moore_det_dyson(const DQMatrix& a, int k, int cap = kDetCap);

DetResult chen_det(const DQMatrix& a, int cap = kDetCap);

DetResult kyrchei_det(const DQMatrix& a, KyrcheiMode mode, int anchor, int cap = kDetCap);

// prod_i |u_ii|^2 over the diagonal of the U factor of a partial-pivoting
// LU decomposition; a nonnegative dual number.
DualNumber quasi_det(const DQMatrix& a);

} // namespace dqlin
