#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wreathstab/numbers.hpp"
#include "wreathstab/partitions.hpp"
#include "wreathstab/permutations.hpp"

namespace wreathstab {

// Largest group order enumerated exhaustively without an explicit override.
inline constexpr long long kDefaultMaxGroupOrder = 1'000'000;

// An element (alpha, pi) of S_k wr S_n: alpha assigns a permutation of [k]
// to each of the n slots, pi permutes the slots.
struct WreathElement {
    int k = 1;
    std::vector<Permutation> alpha;
    Permutation pi;

    int n() const { return static_cast<int>(alpha.size()); }

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
    friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity(int k, int n);

// Group law (alpha, pi)(beta, sigma) = (alpha . (beta o pi^-1), pi sigma).
WreathElement multiply(const WreathElement& x, const WreathElement& y);

// Inverse (alpha^-1 o pi, pi^-1), pointwise inversion of alpha.
WreathElement inverse(const WreathElement& x);

// For each cycle of pi in canonical cycle notation (leader = minimum,
// cycles sorted by leader): the cycle length and the ordered product
// alpha(j) alpha(pi^-1(j)) ... alpha(pi^(-len+1)(j)) starting at the leader j.
std::vector<std::pair<int, Permutation>> cycle_products(const WreathElement& x);

// The conjugacy invariant of S_k wr S_n: for each conjugacy class of S_k
// (named by a cycle type of [k]) and each cycle length m, the number of
// m-cycles of pi whose cycle product lies in that class. Entries are sparse
// and kept in a canonical sorted order.
struct TypeMatrix {
    struct Entry {
        Partition g_class;  // cycle type of the cycle product in S_k
        int length = 1;     // cycle length m
        int count = 0;

        friend bool operator==(const Entry&, const Entry&) = default;
        friend auto operator<=>(const Entry& a, const Entry& b) {
            return std::tie(a.g_class, a.length, a.count) <=> std::tie(b.g_class, b.length, b.count);
        }
    };

    int k = 1;
    int n = 0;
    std::vector<Entry> entries;  // sorted by (g_class, length), counts > 0

    int count_of(const Partition& g_class, int length) const;
    std::string to_string() const;  // e.g. "1.1@1x2+2@2x1"
    std::string to_json() const;    // list of {gClass, cycleLength, count}

    friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;
    friend auto operator<=>(const TypeMatrix& a, const TypeMatrix& b) {
        return std::tie(a.k, a.n, a.entries) <=> std::tie(b.k, b.n, b.entries);
    }
};

TypeMatrix type_of(const WreathElement& x);

// Identity type of S_k wr S_n: n fixed cycles with identity cycle product.
TypeMatrix identity_type(int k, int n);

// An explicit element realizing a given type (every valid type is realized).
WreathElement element_with_type(const TypeMatrix& t);

// Order of the centralizer of any element of the given type:
//   prod over entries of  a! * (m * z)^a
// with z the S_k-centralizer order of the class. Validated against the
// exhaustive class sizes in tests rather than assumed.
BigInt centralizer_order(const TypeMatrix& t);

BigInt wreath_group_order(int k, int n);

// S_k conjugacy classes in canonical order: identity class (1^k) first,
// then lexicographically increasing cycle types.
std::vector<Partition> sk_class_list(int k);

// Exhaustive element access for S_k wr S_n, elements decoded from a mixed
// radix index so nothing of size |G| needs to be stored.
class WreathGroup {
public:
    WreathGroup(int k, int n, long long max_order = kDefaultMaxGroupOrder);

    int k() const { return k_; }
    int n() const { return n_; }
    long long order() const { return order_; }
    WreathElement element(long long index) const;

private:
    int k_;
    int n_;
    long long order_;
    std::vector<Permutation> sk_;  // all k! permutations, lexicographic
};

struct ConjugacyClassInfo {
    TypeMatrix type;
    BigInt size;
    WreathElement representative;
};

// The full class table of S_k wr S_n, classes sorted by type.
struct ClassTable {
    int k = 1;
    int n = 0;
    BigInt group_order;
    std::vector<ConjugacyClassInfo> classes;
    std::map<TypeMatrix, int> index_by_type;

    int index_of(const TypeMatrix& t) const;
    int identity_index() const;
};

// Brute-force class table by a sweep over all (k!)^n n! elements.
ClassTable conjugacy_classes(int k, int n, long long max_order = kDefaultMaxGroupOrder);

// Shared, cached class table (thread safe).
std::shared_ptr<const ClassTable> class_table(int k, int n,
                                              long long max_order = kDefaultMaxGroupOrder);

// Number of conjugacy classes of G wr S_n for a base group with s classes:
// the sum of p(n_1)...p(n_s) over compositions of n into s parts.
BigInt class_count_formula(int s, int n);

// CSV rows "type,size,centralizer" with a header.
std::string class_table_to_csv(const ClassTable& table);

}  // namespace wreathstab
