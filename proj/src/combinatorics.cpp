#include "wreathstab/combinatorics.hpp"

#include <map>
#include <stdexcept>

namespace wreathstab {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    BigInt r = factorial(n);
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
        r /= factorial(p);
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return r;
}

BigInt stirling2(int n, int t) {
    if (n < 0 || t < 0) throw std::invalid_argument("stirling2: negative argument");
    if (t > n) return 0;
    if (n == 0) return 1;  // t == 0 here
    if (t == 0) return 0;
    std::vector<BigInt> row(t + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, t); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[t];
}

namespace {

void rgs_rec(int m, int cell, int blocks_used, std::optional<int> want_blocks,
             std::vector<int>& assign, std::vector<std::vector<int>>& blocks,
             const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (cell == m) {
        if (!want_blocks || blocks_used == *want_blocks) visit(blocks);
        return;
    }
    if (want_blocks) {
        // remaining cells can open at most (m - cell) new blocks
        if (blocks_used > *want_blocks) return;
        if (blocks_used + (m - cell) < *want_blocks) return;
    }
    for (int b = 0; b <= blocks_used; ++b) {
        bool opens = b == blocks_used;
        assign[cell] = b;
        if (opens)
            blocks.emplace_back();
        blocks[b].push_back(cell);
        rgs_rec(m, cell + 1, blocks_used + (opens ? 1 : 0), want_blocks, assign, blocks, visit);
        blocks[b].pop_back();
        if (opens) blocks.pop_back();
    }
}

}  // namespace

void for_each_set_partition(int m, std::optional<int> blocks,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (m < 0) throw std::invalid_argument("for_each_set_partition: negative set size");
    if (m == 0) {
        std::vector<std::vector<int>> empty;
        if (!blocks || *blocks == 0) visit(empty);
        return;
    }
    std::vector<int> assign(m, 0);
    std::vector<std::vector<int>> acc;
    rgs_rec(m, 0, 0, blocks, assign, acc, visit);
}

std::vector<std::vector<std::vector<int>>> set_partitions(int m, std::optional<int> blocks) {
    std::vector<std::vector<std::vector<int>>> out;
    for_each_set_partition(m, blocks, [&out](const auto& p) { out.push_back(p); });
    return out;
}

std::vector<BigInt> forward_differences(const std::vector<BigInt>& values, int order) {
    if (order < 0) throw std::invalid_argument("forward_differences: negative order");
    std::vector<BigInt> cur = values;
    for (int step = 0; step < order; ++step) {
        if (cur.empty()) return {};
        std::vector<BigInt> next;
        next.reserve(cur.size() > 0 ? cur.size() - 1 : 0);
        for (size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace wreathstab
