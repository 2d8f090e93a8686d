#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wreathstab/numbers.hpp"

namespace wreathstab {

// An integer partition: weakly decreasing positive parts. The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    // True if this partition contains `inner` (componentwise).
    bool contains(const Partition& inner) const;

    // Number of standard Young tableaux of this shape (hook length formula).
    BigInt standard_tableaux_count() const;

    std::string to_string() const;  // e.g. "(2,1)"; "()" for empty

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// p(n), the number of partitions of n.
BigInt partition_count(int n);

// All partitions obtained from lambda by adding m boxes, no two in the same
// column (horizontal strips), in lexicographically decreasing order.
std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int m);

// A tuple of partitions. Used both as an irreducible label for wreath
// products (components indexed by the irreducibles of the base group,
// trivial component first) and as the input of row padding.
struct Multipartition {
    std::vector<Partition> components;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps) : components(std::move(comps)) {}

    int total() const;
    std::string to_string() const;  // e.g. "((2,1),(),(1))"

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
        return a.components <=> b.components;
    }
};

}  // namespace wreathstab
