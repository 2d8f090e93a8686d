#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wreathstab/numbers.hpp"

namespace wreathstab {

// Exact binomial coefficient; 0 when k > n or k < 0.
BigInt binomial(int n, int k);

// n! / (m_1! m_2! ... m_r!) for a composition (m_i) of n.
BigInt multinomial(int n, const std::vector<int>& parts);

// Stirling number of the second kind: partitions of an n-set into t
// nonempty blocks. 0 for impossible cases, S(0,0) = 1.
BigInt stirling2(int n, int t);

// Visits every set partition of {0, ..., m-1} exactly once, in restricted
// growth string order. Blocks are listed by their minimum element, so the
// canonical form is deterministic. If `blocks` is given, only partitions
// with exactly that many blocks are visited. m = 0 visits the empty
// partition once.
void for_each_set_partition(int m, std::optional<int> blocks,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Convenience collector for small m.
std::vector<std::vector<std::vector<int>>> set_partitions(int m,
                                                          std::optional<int> blocks = std::nullopt);

// Forward differences of a sequence, `order` times. Result has
// values.size() - order entries (empty if the window is too short).
std::vector<BigInt> forward_differences(const std::vector<BigInt>& values, int order);

}  // namespace wreathstab
