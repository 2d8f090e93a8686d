#pragma once

#include <vector>

#include "wreathstab/numbers.hpp"
#include "wreathstab/partitions.hpp"
#include "wreathstab/permutations.hpp"

namespace wreathstab {

// Dense integer matrix, row major. Small dimensions only (representation
// matrices of symmetric groups at desk scale).
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& rhs) const;
    long long trace() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// A standard Young tableau, rows of strictly increasing entries 1..m.
using Tableau = std::vector<std::vector<int>>;

// All standard tableaux of a shape, in a fixed deterministic order.
std::vector<Tableau> standard_tableaux(const Partition& shape);

// Irreducible symmetric group character value chi^shape(cycle_type),
// computed by the Murnaghan-Nakayama rule (recursive border-strip removal
// on beta-numbers, memoized on (shape, remaining cycle type)).
BigInt sn_character(const Partition& shape, const Partition& cycle_type);

// Matrices of the adjacent transpositions s_1, ..., s_{m-1} in Young's
// natural (integral Specht) representation, on the basis of polytabloids of
// standard tableaux. Entry i of the result is the matrix of (i+1, i+2).
std::vector<IntMatrix> natural_rep_generators(const Partition& shape);

// Matrix of an arbitrary permutation in the natural representation,
// as the product of adjacent transposition generator matrices.
IntMatrix natural_rep_matrix(const std::vector<IntMatrix>& generators, int dim,
                             const Permutation& p);

}  // namespace wreathstab
