#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wreathstab/class_functions.hpp"
#include "wreathstab/numbers.hpp"
#include "wreathstab/partitions.hpp"
#include "wreathstab/wreath_group.hpp"

namespace wreathstab {

// Canonical listing of the irreducibles of S_k by partitions of k:
// lexicographically decreasing, so (k) — the trivial representation —
// comes first.
std::vector<Partition> sk_irrep_list(int k);

// An irreducible of S_k wr S_n is labelled by a multipartition with one
// component per irreducible of S_k (in sk_irrep_list order) and total n.
void validate_label(int k, int n, const Multipartition& label);

// All labels of S_k wr S_n in a fixed deterministic order.
std::vector<Multipartition> all_irrep_labels(int k, int n);

// Dimension: (n! / prod n_i!) * prod (dim V_i)^(n_i) * prod f^(label_i),
// where n_i = |label_i| and f counts standard tableaux. No size cap.
BigInt irrep_dimension(int k, const Multipartition& label);

// The irreducible character of S_k wr S_n with the given label, built from
// explicit matrices: the twisted tensor power of the base irreducibles (the
// inertia group permutes tensor factors), tensored with the pullback of the
// symmetric-group factor, then induced by the element-sum formula over the
// full group. Exhaustive, so the group-order cap applies.
ClassFunction irreducible_character(int k, int n, const Multipartition& label,
                                    long long max_order = kDefaultMaxGroupOrder);

struct CharacterTable {
    std::shared_ptr<const ClassTable> classes;
    std::vector<Multipartition> labels;
    std::vector<ClassFunction> characters;  // aligned with labels
};

// Cached full character table (thread safe).
std::shared_ptr<const CharacterTable> character_table(int k, int n,
                                                      long long max_order = kDefaultMaxGroupOrder);

// Multiplicities of f in terms of the irreducible characters. Throws
// std::domain_error if any multiplicity is negative or non-integral, or if
// the dimensions do not add up — the input was not a character.
std::map<Multipartition, BigInt> decompose(const ClassFunction& f,
                                           long long max_order = kDefaultMaxGroupOrder);

// Branching of M(T)_n for an irreducible T = W(delta) of S_k wr S_d: one
// label per horizontal strip added to the trivial component, all other
// components untouched, every multiplicity 1. Valid at any scale.
std::vector<Multipartition> pieri_labels(int k, int d, const Multipartition& delta, int n);

// CSV character table: rows = labels (with dimension), columns = types.
std::string character_table_to_csv(const CharacterTable& table);

}  // namespace wreathstab
