#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "degenmat/sequences.hpp"

namespace degenmat {

namespace {

constexpr int kMaxEnumeration = 9;

void check_enum_size(int m) {
    if (m < 0 || m > kMaxEnumeration)
        throw std::invalid_argument("enumeration oracle limited to sets of size <= 9");
}

// Visits every assignment of elements 1..m to blocks as a restricted growth
// string; counts those with exactly k blocks that satisfy `ok`.
template <typename Pred>
long long count_partitions_if(int m, int k, Pred ok) {
    if (m == 0) return k == 0 ? 1 : 0;
    std::vector<int> block(static_cast<std::size_t>(m), 0);
    long long total = 0;
    // rgs[i] <= 1 + max(rgs[0..i-1])
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == m) {
            if (used == k && ok(block)) ++total;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return total;
}

// Cycle count of a permutation given as an image array.
int cycle_count(const std::vector<int>& perm) {
    const int m = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    int cycles = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
            seen[static_cast<std::size_t>(j)] = true;
    }
    return cycles;
}

// True when elements 0..r-1 lie in pairwise distinct cycles of perm.
bool r_distinct_cycles(const std::vector<int>& perm, int r) {
    for (int a = 0; a < r; ++a) {
        for (int j = perm[static_cast<std::size_t>(a)]; j != a;
             j = perm[static_cast<std::size_t>(j)]) {
            if (j < r) return false;  // another distinguished element in the same cycle
        }
    }
    return true;
}

template <typename Pred>
long long count_permutations_if(int m, int k, Pred ok) {
    if (m == 0) return k == 0 ? 1 : 0;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        if (cycle_count(perm) == k && ok(perm)) ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

long long count_set_partitions(int m, int k) {
    check_enum_size(m);
    return count_partitions_if(m, k, [](const std::vector<int>&) { return true; });
}

long long count_cycle_permutations(int m, int k) {
    check_enum_size(m);
    return count_permutations_if(m, k, [](const std::vector<int>&) { return true; });
}

long long count_r_partitions(int m, int k, int r) {
    check_enum_size(m);
    if (r > m || r > k) return 0;
    return count_partitions_if(m, k, [r](const std::vector<int>& block) {
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                if (block[static_cast<std::size_t>(a)] == block[static_cast<std::size_t>(b)])
                    return false;
        return true;
    });
}

long long count_r_cycle_permutations(int m, int k, int r) {
    check_enum_size(m);
    if (r > m || r > k) return 0;
    return count_permutations_if(m, k,
                                 [r](const std::vector<int>& perm) { return r_distinct_cycles(perm, r); });
}

}  // namespace degenmat
