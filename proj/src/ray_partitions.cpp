#include "wreathstab/ray_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreathstab {

ClusterType::ClusterType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int k : sizes_) {
        if (k < 1) throw std::invalid_argument("ClusterType: cluster sizes must be >= 1");
        cells_ += k;
    }
}

ClusterType ClusterType::uniform(int k, int n) {
    if (k < 1) throw std::invalid_argument("ClusterType: cluster size must be >= 1");
    if (n < 0) throw std::invalid_argument("ClusterType: negative cluster count");
    return ClusterType(std::vector<int>(n, k));
}

namespace {

std::vector<TableCell> table_cells(const ClusterType& K) {
    std::vector<TableCell> cells;
    cells.reserve(K.cells());
    for (int i = 0; i < K.rows(); ++i)
        for (int j = 0; j < K.sizes()[i]; ++j) cells.push_back({i + 1, j + 1});
    return cells;
}

// Components of the "shares a row" relation on blocks, given each block as a
// list of cell indices into the lexicographic cell list.
int block_agility(const std::vector<std::vector<int>>& blocks,
                  const std::vector<TableCell>& cells, int rows) {
    int ell = static_cast<int>(blocks.size());
    std::vector<int> parent(ell);
    for (int i = 0; i < ell; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> row_block(rows + 1, -1);
    for (int b = 0; b < ell; ++b)
        for (int cell : blocks[b]) {
            int row = cells[cell].row;
            if (row_block[row] == -1)
                row_block[row] = b;
            else
                parent[find(b)] = find(row_block[row]);
        }
    int components = 0;
    for (int i = 0; i < ell; ++i)
        if (find(i) == i) ++components;
    return components;
}

int block_degree(const std::vector<std::vector<int>>& blocks, const std::vector<TableCell>& cells,
                 const ClusterType& K, int p, int q) {
    int ell = static_cast<int>(blocks.size());
    int a = block_agility(blocks, cells, K.rows());
    return p * (K.rows() - a) + (q - 1) * (K.cells() - ell);
}

void check_parameters(int p, int q) {
    if (p < 0) throw std::invalid_argument("p must be >= 0");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
}

void check_cap(const ClusterType& K, int max_cells) {
    if (K.cells() > max_cells)
        throw CapExceeded("table has " + std::to_string(K.cells()) + " cells, cap is " +
                          std::to_string(max_cells));
}

// Walks set partitions of the cell list in restricted-growth order. When
// max_merges is set, prefixes that can no longer end with at most that many
// merges (cells minus blocks) are pruned.
void set_partitions_of_cells(int m, std::optional<int> max_merges,
                             const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> walk = [&](int cell) {
        if (max_merges && cell - static_cast<int>(blocks.size()) > *max_merges) return;
        if (cell == m) {
            visit(blocks);
            return;
        }
        for (size_t b = 0; b <= blocks.size(); ++b) {
            bool opens = b == blocks.size();
            if (opens)
                blocks.emplace_back();
            blocks[b].push_back(cell);
            walk(cell + 1);
            blocks[b].pop_back();
            if (opens) blocks.pop_back();
        }
    };
    walk(0);
}

}  // namespace

int agility(const RayPartition& q, const ClusterType& K) {
    std::vector<TableCell> cells = table_cells(K);
    std::map<TableCell, int> index;
    for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> blocks;
    for (const auto& part : q.parts) {
        std::vector<int> block;
        for (const auto& cell : part) block.push_back(index.at(cell));
        blocks.push_back(std::move(block));
    }
    return block_agility(blocks, cells, K.rows());
}

int degree(const RayPartition& q, const ClusterType& K, int p, int qdim) {
    check_parameters(p, qdim);
    return p * (K.rows() - agility(q, K)) + (qdim - 1) * (K.cells() - q.length());
}

void for_each_ray_partition(const ClusterType& K, std::optional<DegreeFilter> filter,
                            const std::function<void(const RayPartition&)>& visit,
                            int max_cells) {
    check_cap(K, max_cells);
    if (filter) check_parameters(filter->p, filter->q);
    std::vector<TableCell> cells = table_cells(K);
    int m = K.cells();

    std::optional<int> max_merges;
    if (filter && filter->q >= 2) max_merges = filter->d / (filter->q - 1);

    set_partitions_of_cells(m, max_merges, [&](const std::vector<std::vector<int>>& blocks) {
        if (filter && block_degree(blocks, cells, K, filter->p, filter->q) != filter->d) return;

        // expand ray orders: each block's minimum stays first, the rest runs
        // through its permutations in lexicographic order
        RayPartition rp;
        rp.parts.resize(blocks.size());
        std::function<void(size_t)> expand = [&](size_t b) {
            if (b == blocks.size()) {
                visit(rp);
                return;
            }
            const std::vector<int>& block = blocks[b];
            std::vector<int> tail(block.begin() + 1, block.end());
            do {
                rp.parts[b].clear();
                rp.parts[b].push_back(cells[block[0]]);
                for (int idx : tail) rp.parts[b].push_back(cells[idx]);
                expand(b + 1);
            } while (std::next_permutation(tail.begin(), tail.end()));
        };
        expand(0);
    });
}

BigInt betti(const ClusterType& K, int p, int q, int d, int max_cells) {
    check_parameters(p, q);
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    check_cap(K, max_cells);
    std::vector<TableCell> cells = table_cells(K);

    std::optional<int> max_merges;
    if (q >= 2) max_merges = d / (q - 1);

    BigInt count = 0;
    set_partitions_of_cells(K.cells(), max_merges, [&](const std::vector<std::vector<int>>& blocks) {
        if (block_degree(blocks, cells, K, p, q) != d) return;
        BigInt orders = 1;
        for (const auto& b : blocks) orders *= factorial(static_cast<int>(b.size()) - 1);
        count += orders;
    });
    return count;
}

DegreeProfile poincare_table(const ClusterType& K, int p, int q, int max_cells) {
    check_parameters(p, q);
    check_cap(K, max_cells);
    std::vector<TableCell> cells = table_cells(K);

    DegreeProfile profile;
    set_partitions_of_cells(K.cells(), std::nullopt,
                            [&](const std::vector<std::vector<int>>& blocks) {
                                BigInt orders = 1;
                                for (const auto& b : blocks)
                                    orders *= factorial(static_cast<int>(b.size()) - 1);
                                profile[block_degree(blocks, cells, K, p, q)] += orders;
                            });
    return profile;
}

std::string ray_partition_to_json(const RayPartition& q) {
    std::string s = "[";
    for (size_t b = 0; b < q.parts.size(); ++b) {
        if (b) s += ',';
        s += '[';
        for (size_t i = 0; i < q.parts[b].size(); ++i) {
            if (i) s += ',';
            s += '[' + std::to_string(q.parts[b][i].row) + ',' +
                 std::to_string(q.parts[b][i].col) + ']';
        }
        s += ']';
    }
    s += ']';
    return s;
}

}  // namespace wreathstab
