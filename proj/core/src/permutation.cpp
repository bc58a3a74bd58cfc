#include "dqlin/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace dqlin {

bool Permutation::valid() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation CycleDecomposition::to_permutation() const {
    Permutation p = Permutation::identity(n);
    for (const auto& cycle : cycles) {
        const size_t k = cycle.size();
        for (size_t i = 0; i < k; ++i)
            p.images[static_cast<size_t>(cycle[i] - 1)] = cycle[(i + 1) % k];
    }
    return p;
}

std::string CycleDecomposition::to_string() const {
    std::string out;
    for (const auto& cycle : cycles) {
        out += '(';
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

int sign(const CycleDecomposition& dec) {
    int transpositions = 0;
    for (const auto& cycle : dec.cycles)
        transpositions += static_cast<int>(cycle.size()) - 1;
    return (transpositions % 2 == 0) ? 1 : -1;
}

namespace {

void check_valid(const Permutation& perm) {
    if (!perm.valid())
        throw InputError("decompose: images are not a bijection of {1..n}");
}

// Raw orbits of the permutation, each starting at its minimal element.
std::vector<std::vector<int>> raw_cycles(const Permutation& perm) {
    const int n = perm.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            cycle.push_back(cur);
            seen[static_cast<size_t>(cur - 1)] = 1;
            cur = perm.apply(cur);
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// Rotate a cycle so that `lead` is its first element.
void rotate_to_front(std::vector<int>& cycle, int lead) {
    auto it = std::find(cycle.begin(), cycle.end(), lead);
    std::rotate(cycle.begin(), it, cycle.end());
}

void check_cap(int n, int cap) {
    if (n < 1)
        throw InputError("enumerate: n must be at least 1");
    if (n > cap)
        throw SizeCapError("enumerate: n exceeds the enumeration cap of " +
                           std::to_string(cap));
}

} // namespace

CycleDecomposition decompose(const Permutation& perm, CycleConvention convention) {
    check_valid(perm);
    auto cycles = raw_cycles(perm);
    for (auto& cycle : cycles) {
        const int lead = convention == CycleConvention::MinFirstDesc
                             ? *std::min_element(cycle.begin(), cycle.end())
                             : *std::max_element(cycle.begin(), cycle.end());
        rotate_to_front(cycle, lead);
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return {std::move(cycles), perm.size()};
}

CycleDecomposition decompose_kyrchei(const Permutation& perm, KyrcheiMode mode, int anchor) {
    check_valid(perm);
    if (anchor < 1 || anchor > perm.size())
        throw InputError("decompose_kyrchei: anchor out of range");
    auto cycles = raw_cycles(perm);

    std::vector<int> anchor_cycle;
    std::vector<std::vector<int>> rest;
    for (auto& cycle : cycles) {
        if (std::find(cycle.begin(), cycle.end(), anchor) != cycle.end())
            anchor_cycle = std::move(cycle);
        else
            rest.push_back(std::move(cycle));
    }

    CycleDecomposition dec;
    dec.n = perm.size();
    if (mode == KyrcheiMode::Row) {
        rotate_to_front(anchor_cycle, anchor);
        for (auto& cycle : rest)
            rotate_to_front(cycle, *std::min_element(cycle.begin(), cycle.end()));
        std::sort(rest.begin(), rest.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        dec.cycles.push_back(std::move(anchor_cycle));
        for (auto& cycle : rest) dec.cycles.push_back(std::move(cycle));
    } else {
        // Mirror form: same leaders as the row form, but the cycle list is
        // reversed -- minimal leaders descending, anchored cycle last.
        rotate_to_front(anchor_cycle, anchor);
        for (auto& cycle : rest)
            rotate_to_front(cycle, *std::min_element(cycle.begin(), cycle.end()));
        std::sort(rest.begin(), rest.end(),
                  [](const auto& a, const auto& b) { return a.front() > b.front(); });
        for (auto& cycle : rest) dec.cycles.push_back(std::move(cycle));
        dec.cycles.push_back(std::move(anchor_cycle));
    }
    return dec;
}

namespace {

template <typename Canonicalize>
std::vector<CycleDecomposition> enumerate_all(int n, int cap, Canonicalize&& canon) {
    check_cap(n, cap);
    std::vector<CycleDecomposition> out;
    Permutation perm = Permutation::identity(n);
    do {
        out.push_back(canon(perm));
    } while (std::next_permutation(perm.images.begin(), perm.images.end()));
    return out;
}

} // namespace

std::vector<CycleDecomposition> enumerate_moore(int n, int cap) {
    return enumerate_all(n, cap, [](const Permutation& p) {
        return decompose(p, CycleConvention::MinFirstDesc);
    });
}

std::vector<CycleDecomposition> enumerate_chen(int n, int cap) {
    return enumerate_all(n, cap, [](const Permutation& p) {
        return decompose(p, CycleConvention::MaxFirstDesc);
    });
}

std::vector<CycleDecomposition> enumerate_kyrchei(int n, KyrcheiMode mode, int anchor, int cap) {
    if (anchor < 1 || anchor > n)
        throw InputError("enumerate_kyrchei: anchor out of range");
    return enumerate_all(n, cap, [&](const Permutation& p) {
        return decompose_kyrchei(p, mode, anchor);
    });
}

} // namespace dqlin
