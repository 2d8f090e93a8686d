#include "wreathstab/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wreathstab/partitions.hpp"

namespace wreathstab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int i = start;
        do {
            seen[i] = 1;
            cycle.push_back(i);
            i = images_[i];
        } while (i != start);
        out.push_back(std::move(cycle));
    }
    return out;  // leaders increase because starts scan upward
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<int> adjacent_transposition_word(const Permutation& p) {
    // Each cycle is expanded into transpositions, each transposition (a,b)
    // with a < b into the chain s_a ... s_{b-1} ... s_a.
    std::vector<int> word;
    auto append_transposition = [&word](int a, int b) {
        for (int i = a; i < b; ++i) word.push_back(i);
        for (int i = b - 2; i >= a; --i) word.push_back(i);
    };
    for (const auto& cycle : p.cycles()) {
        // (c0 c1 ... cL) = (c0 cL)(c0 c(L-1))...(c0 c1) as composition
        for (size_t j = cycle.size() - 1; j >= 1; --j) {
            int a = cycle[0], b = cycle[j];
            if (a > b) std::swap(a, b);
            append_transposition(a, b);
        }
    }
    return word;
}

}  // namespace wreathstab
