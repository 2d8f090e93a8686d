#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreathstab/numbers.hpp"

namespace wreathstab {

// Largest table (total cell count) enumerated without an explicit override.
// Ray-partition counts grow like |K|!, past 10^9 beyond 12 cells.
inline constexpr int kDefaultMaxCells = 12;

// A cluster type K = (k_1, ..., k_r), all k_i >= 1. r = 0 is the empty type.
class ClusterType {
public:
    ClusterType() = default;
    explicit ClusterType(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int rows() const { return static_cast<int>(sizes_.size()); }
    int cells() const { return cells_; }

    // n equal clusters of k points each
    static ClusterType uniform(int k, int n);

private:
    std::vector<int> sizes_;
    int cells_ = 0;
};

// One cell of the table T_K: row i in 1..r, column j in 1..k_i.
// Lexicographic cell order is the ordering of the (row, col) pairs.
struct TableCell {
    int row = 0;
    int col = 0;
    friend bool operator==(const TableCell&, const TableCell&) = default;
    friend auto operator<=>(const TableCell&, const TableCell&) = default;
};

// A ray partition: an ordered partition of T_K. Parts appear in increasing
// order of their minima; within a part, cells appear in the ray order, whose
// first element is the part's minimum.
struct RayPartition {
    std::vector<std::vector<TableCell>> parts;

    int length() const { return static_cast<int>(parts.size()); }
};

// Number of components after joining all parts that contain cells of a
// common row. Satisfies 1 <= agility <= min(length, r) for nonempty tables.
int agility(const RayPartition& q, const ClusterType& K);

// Cohomological degree of the generator indexed by q:
//   p (r - agility) + (q - 1)(|K| - length).
int degree(const RayPartition& q, const ClusterType& K, int p, int qdim);

struct DegreeFilter {
    int p = 0;
    int q = 2;
    int d = 0;
};

// Visits every ray partition of T_K exactly once: set partitions of the cell
// list in restricted-growth order, then for each block the (|Q|-1)! ray
// orders with the minimum pinned first. With a filter, set partitions are
// pruned by the length bound length >= |K| - d/(q-1) (valid for q >= 2) and
// only partitions of exact degree d are expanded.
void for_each_ray_partition(const ClusterType& K, std::optional<DegreeFilter> filter,
                            const std::function<void(const RayPartition&)>& visit,
                            int max_cells = kDefaultMaxCells);

// Ranks of H^d by degree. All counting is done at the set-partition level
// (degree does not depend on the ray orders), so these run on tables whose
// full ray-partition list would be far too large to stream.
using DegreeProfile = std::map<int, BigInt>;

BigInt betti(const ClusterType& K, int p, int q, int d, int max_cells = kDefaultMaxCells);
DegreeProfile poincare_table(const ClusterType& K, int p, int q,
                             int max_cells = kDefaultMaxCells);

// JSON array of parts, each part an array of [row, column] pairs.
std::string ray_partition_to_json(const RayPartition& q);

}  // namespace wreathstab
