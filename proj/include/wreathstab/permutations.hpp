#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace wreathstab {

class Partition;

// A permutation of {0, ..., n-1}, stored as its image table.
// Composition follows function application: (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Cycles in the canonical form used everywhere in this project: each
    // cycle led by its smallest element, cycles sorted by their leaders.
    // Fixed points appear as length-1 cycles.
    std::vector<std::vector<int>> cycles() const;
    Partition cycle_type() const;

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// All n! permutations of degree n in lexicographic order of image tables.
std::vector<Permutation> all_permutations(int n);

// Expresses p as a product of adjacent transpositions s_i = (i, i+1),
// returned as the list of 0-based indices i, leftmost factor first.
std::vector<int> adjacent_transposition_word(const Permutation& p);

}  // namespace wreathstab
