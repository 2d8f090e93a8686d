#include "wreathstab/module_structure.hpp"

#include <stdexcept>

#include "wreathstab/combinatorics.hpp"

namespace wreathstab {

BigInt md_hom_count(int k, int d, int n) {
    if (k < 1 || d < 0 || n < 0) throw std::invalid_argument("md_hom_count: bad arguments");
    if (n < d) return 0;
    BigInt injections = 1;
    for (int i = 0; i < d; ++i) injections *= n - i;
    BigInt colours = 1;
    BigInt kf = factorial(k);
    for (int i = 0; i < d; ++i) colours *= kf;
    return injections * colours;
}

BigInt mt_rank(int d, const BigInt& dim_t, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("mt_rank: bad arguments");
    if (n < d) return 0;
    return binomial(n, d) * dim_t;
}

std::vector<BigInt> generator_ranks(const std::vector<BigInt>& ranks) {
    std::vector<BigInt> t(ranks.size());
    for (size_t d = 0; d < ranks.size(); ++d) {
        BigInt acc = 0;
        for (size_t j = 0; j <= d; ++j) {
            BigInt term = binomial(static_cast<int>(d), static_cast<int>(j)) * ranks[j];
            if ((d - j) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        t[d] = acc;
    }
    return t;
}

BigInt predicted_rank(const std::vector<BigInt>& generator_ranks, int n) {
    if (n < 0) throw std::invalid_argument("predicted_rank: negative n");
    BigInt r = 0;
    for (size_t d = 0; d < generator_ranks.size(); ++d)
        r += binomial(n, static_cast<int>(d)) * generator_ranks[d];
    return r;
}

PaddedLabel pad_multipartition(const Multipartition& mp, int n) {
    if (mp.components.empty())
        throw std::invalid_argument("pad_multipartition: no components");
    int threshold = mp.total() + mp.components[0].part(0);
    if (n < threshold) return {true, {}};
    PaddedLabel out;
    out.below_threshold = false;
    out.label = mp;
    std::vector<int> first{n - mp.total()};
    for (int part : mp.components[0].parts()) first.push_back(part);
    out.label.components[0] = Partition(std::move(first));
    return out;
}

StableRanges stable_ranges(int generation_degree, int q, int d) {
    if (q < 2) throw std::invalid_argument("stable_ranges: requires q >= 2");
    if (d < 0 || generation_degree < 0)
        throw std::invalid_argument("stable_ranges: negative degree");
    StableRanges r;
    r.generation_degree = generation_degree;
    r.gen_deg_theory_bound = (2 * d) / (q - 1);
    r.unordered_theory_bound = r.gen_deg_theory_bound;
    r.rep_stab_theory_bound = (4 * d) / (q - 1);
    r.rep_stab_onset = 2 * generation_degree;
    r.unordered_onset = generation_degree;
    if (generation_degree > r.gen_deg_theory_bound)
        throw std::logic_error("stable_ranges: generation degree " +
                               std::to_string(generation_degree) + " exceeds the bound " +
                               std::to_string(r.gen_deg_theory_bound) +
                               "; this contradicts finite generation");
    return r;
}

}  // namespace wreathstab
