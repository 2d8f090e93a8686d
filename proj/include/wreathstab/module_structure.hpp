#pragma once

#include <optional>
#include <vector>

#include "wreathstab/numbers.hpp"
#include "wreathstab/partitions.hpp"

namespace wreathstab {

// |Hom(d, n)| for the category of k-coloured injections:
// (n!/(n-d)!) * (k!)^d, and 0 when n < d. This is the rank of the free
// module M(d) in weight n.
BigInt md_hom_count(int k, int d, int n);

// Rank of the induced module M(T)_n for a generator of dimension dim_t in
// degree d: binomial(n, d) * dim_t, and 0 when n < d.
BigInt mt_rank(int d, const BigInt& dim_t, int n);

// Generator ranks recovered from a rank sequence r_0..r_N:
//   t_d = sum_{j<=d} (-1)^(d-j) binomial(d, j) r_j,
// the unique solution of r_n = sum_d binomial(n, d) t_d on the window.
// Negative entries are reported as-is: they falsify the free-module
// hypothesis for the input and are a diagnostic, not an error.
std::vector<BigInt> generator_ranks(const std::vector<BigInt>& ranks);

// sum_d binomial(n, d) t_d.
BigInt predicted_rank(const std::vector<BigInt>& generator_ranks, int n);

// Result of padding a multipartition out to total n: by convention the
// family is zero below the threshold n >= total + first row of the first
// component, and that case is a first-class value rather than an error.
struct PaddedLabel {
    bool below_threshold = false;
    Multipartition label;  // meaningful only when !below_threshold
};

// Grows the first (trivial-character) component by a new top row of length
// n - total; all other components are unchanged.
PaddedLabel pad_multipartition(const Multipartition& mp, int n);

// Stabilization onsets implied by a generation degree g in cohomological
// degree d over R^{p,q}, together with the a-priori bounds floor(2d/(q-1))
// on generation and floor(4d/(q-1)) on multiplicity stabilization.
struct StableRanges {
    int generation_degree = 0;
    int rep_stab_onset = 0;         // 2g
    int rep_stab_theory_bound = 0;   // floor(4d/(q-1))
    int unordered_onset = 0;        // g
    int unordered_theory_bound = 0;  // floor(2d/(q-1))
    int gen_deg_theory_bound = 0;    // floor(2d/(q-1))
};

// Requires q >= 2 and g <= floor(2d/(q-1)); a violation would contradict
// the finite-generation bound and is reported as a logic error.
StableRanges stable_ranges(int generation_degree, int q, int d);

}  // namespace wreathstab
