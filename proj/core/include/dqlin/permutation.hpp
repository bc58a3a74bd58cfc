#pragma once

#include <string>
#include <vector>

#include "dqlin/errors.hpp"

namespace dqlin {

// Default cap on factorial-size enumerations (9! = 362,880 permutations).
inline constexpr int kEnumerationCap = 9;

// A permutation of {1..n} in one-line notation: images[j-1] = sigma(j).
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    bool valid() const;
    int apply(int j) const { return images[j - 1]; }

    static Permutation identity(int n);

    bool operator==(const Permutation&) const = default;
};

// Canonical disjoint-cycle form.  Fixed points appear as 1-cycles and the
// cycles cover {1..n}.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    int n = 0;

    int cycle_count() const { return static_cast<int>(cycles.size()); }
    Permutation to_permutation() const;
    // Parenthesized form, e.g. "(3 1 2)(4)".
    std::string to_string() const;

    bool operator==(const CycleDecomposition&) const = default;
};

// Which element leads each cycle and how the cycles are ordered.
enum class CycleConvention {
    // Cycles led by their minimal element, leaders strictly decreasing.
    MinFirstDesc,
    // Cycles led by their maximal element, leaders strictly decreasing
    // (the first leader is necessarily n).
    MaxFirstDesc,
};

enum class KyrcheiMode { Row, Column };

// Sign of a decomposition: product over cycles of (-1)^(length-1),
// equivalently (-1)^(n - #cycles).
int sign(const CycleDecomposition& dec);

CycleDecomposition decompose(const Permutation& perm, CycleConvention convention);

// Anchored canonical form.  Row mode: the cycle containing `anchor` comes
// first and starts at the anchor; remaining cycles are min-led with leaders
// increasing.  Column mode is the mirror: remaining cycles end at their
// minimal element with those minima decreasing, and the anchor cycle comes
// last, ending at the anchor.
CycleDecomposition decompose_kyrchei(const Permutation& perm, KyrcheiMode mode, int anchor);

std::vector<CycleDecomposition> enumerate_moore(int n, int cap = kEnumerationCap);
std::vector<CycleDecomposition> enumerate_chen(int n, int cap = kEnumerationCap);
std::vector<CycleDecomposition> enumerate_kyrchei(int n, KyrcheiMode mode, int anchor,
                                                  int cap = kEnumerationCap);

} // namespace dqlin
