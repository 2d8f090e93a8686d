#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "wreathstab/combinatorics.hpp"
#include "wreathstab/tableaux.hpp"
#include "wreathstab/wreath_chars.hpp"

using namespace wreathstab;

TEST_CASE("label validation and listing") {
    CHECK_THROWS_AS(validate_label(2, 2, Multipartition({Partition({2})})), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(2, 3, Multipartition({Partition({2}), Partition()})),
                    std::invalid_argument);

    auto labels22 = all_irrep_labels(2, 2);
    CHECK(labels22.size() == 5);
    std::set<Multipartition> distinct(labels22.begin(), labels22.end());
    CHECK(distinct.size() == labels22.size());

    for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        int s = static_cast<int>(partitions_of(k).size());
        CHECK(BigInt(all_irrep_labels(k, n).size()) == class_count_formula(s, n));
    }
}

TEST_CASE("irrep dimensions") {
    // trivial label
    Multipartition triv({Partition({4}), Partition()});
    CHECK(irrep_dimension(2, triv) == 1);

    // k = 1 reduces to standard tableaux counts
    for (const auto& lambda : partitions_of(5))
        CHECK(irrep_dimension(1, Multipartition({lambda})) == lambda.standard_tableaux_count());

    // S_2 wr S_2: dims {1,1,1,1,2} with square sum 8
    std::multiset<int> dims;
    BigInt square_sum = 0;
    for (const auto& label : all_irrep_labels(2, 2)) {
        BigInt d = irrep_dimension(2, label);
        dims.insert(static_cast<int>(d));
        square_sum += d * d;
    }
    CHECK(dims == std::multiset<int>{1, 1, 1, 1, 2});
    CHECK(square_sum == 8);
}

TEST_CASE("trivial character is constant 1") {
    for (auto [k, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        std::vector<Partition> comps{Partition({n})};
        comps.resize(partitions_of(k).size());
        ClassFunction chi = irreducible_character(k, n, Multipartition(comps));
        for (const auto& v : chi.values()) CHECK(v == 1);
    }
}

TEST_CASE("k = 1 characters reduce to symmetric group characters") {
    for (int n = 1; n <= 5; ++n) {
        auto table = class_table(1, n);
        for (const auto& lambda : partitions_of(n)) {
            ClassFunction chi = irreducible_character(1, n, Multipartition({lambda}));
            for (size_t c = 0; c < table->classes.size(); ++c) {
                // the cycle type of the class is readable from its type matrix
                std::vector<int> lens;
                for (const auto& e : table->classes[c].type.entries)
                    for (int i = 0; i < e.count; ++i) lens.push_back(e.length);
                std::sort(lens.begin(), lens.end(), std::greater<int>());
                CHECK(chi.value(static_cast<int>(c)) ==
                      BigRat(sn_character(lambda, Partition(lens))));
            }
        }
    }
}

TEST_CASE("frozen character values of the order-8 group") {
    // S_2 wr S_2 is dihedral of order 8; its unique 2-dimensional character
    // takes value -2 at the central rotation and 0 elsewhere off identity.
    Multipartition mixed({Partition({1}), Partition({1})});
    ClassFunction chi = irreducible_character(2, 2, mixed);
    CHECK(chi.at_identity() == 2);
    TypeMatrix central;
    central.k = 2;
    central.n = 2;
    central.entries = {{Partition({2}), 1, 2}};
    CHECK(chi.value_at(central) == -2);
    for (size_t c = 0; c < chi.table().classes.size(); ++c) {
        const TypeMatrix& t = chi.table().classes[c].type;
        if (t == central || t == identity_type(2, 2)) continue;
        CHECK(chi.value(static_cast<int>(c)) == 0);
    }
}

TEST_CASE("character degrees of the order-48 group match the hyperoctahedral table") {
    // S_2 wr S_3 is the signed permutation group on 3 letters; its
    // character degrees are the classical 1,1,1,1,2,2,3,3,3,3
    std::multiset<int> dims;
    for (const auto& label : all_irrep_labels(2, 3))
        dims.insert(static_cast<int>(irrep_dimension(2, label)));
    CHECK(dims == std::multiset<int>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("character tables are orthonormal, integral and complete") {
    for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        auto table = character_table(k, n);
        size_t count = table->labels.size();
        CHECK(count == table->classes->classes.size());
        BigInt square_sum = 0;
        for (size_t i = 0; i < count; ++i) {
            CHECK(table->characters[i].integer_valued());
            CHECK(BigRat(irrep_dimension(k, table->labels[i])) ==
                  table->characters[i].at_identity());
            square_sum += numerator(table->characters[i].at_identity()) *
                          numerator(table->characters[i].at_identity());
            for (size_t j = i; j < count; ++j) {
                BigRat ip = inner_product(table->characters[i], table->characters[j]);
                CHECK(ip == (i == j ? BigRat(1) : BigRat(0)));
            }
        }
        CHECK(square_sum == table->classes->group_order);
    }
}

TEST_CASE("inner product basics") {
    auto table = class_table(2, 2);
    ClassFunction triv = ClassFunction::trivial(table);
    CHECK(inner_product(triv, triv) == 1);

    // sign-of-pi pullback: value (-1)^(n - number of cycles)
    std::vector<BigRat> sign_values;
    for (const auto& c : table->classes) {
        int cycles = 0;
        for (const auto& e : c.type.entries) cycles += e.count;
        sign_values.push_back((2 - cycles) % 2 == 0 ? 1 : -1);
    }
    ClassFunction sign_pi(table, sign_values);
    CHECK(inner_product(triv, sign_pi) == 0);
    CHECK(inner_product(sign_pi, sign_pi) == 1);

    // <f, f> is a sum of squares weighted by class sizes
    std::vector<BigRat> arbitrary{BigRat(3, 7), BigRat(-2), BigRat(5, 2), BigRat(0), BigRat(-1, 3)};
    ClassFunction f(table, arbitrary);
    CHECK(inner_product(f, f) >= 0);

    CHECK_THROWS_AS(inner_product(triv, ClassFunction::trivial(class_table(2, 3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(ClassFunction(table, {BigRat(1)}), std::invalid_argument);
}

TEST_CASE("induction degree and permutation character") {
    // index count at the identity
    for (auto [k, d, n] : {std::tuple{2, 1, 2}, std::tuple{2, 1, 3}, std::tuple{1, 2, 4}}) {
        ClassFunction triv = ClassFunction::trivial(class_table(k, d));
        ClassFunction ind = induce_with_trivial(triv, n);
        CHECK(ind.at_identity() == BigRat(binomial(n, d)));
    }

    // (k,d,n) = (2,1,2): the induced permutation character counts the slots
    // fixed by pi, i.e. coloured 1-cycles of either colour
    ClassFunction ind = induce_with_trivial(ClassFunction::trivial(class_table(2, 1)), 2);
    for (const auto& c : ind.table().classes) {
        int fixed = c.type.count_of(Partition({1, 1}), 1) + c.type.count_of(Partition({2}), 1);
        CHECK(ind.value_at(c.type) == fixed);
    }
}

TEST_CASE("Frobenius reciprocity on a small instance") {
    // <Ind f, chi> = <f, Res chi> for f = chi_delta boxtimes trivial
    int k = 2, d = 1, n = 2;
    auto small = character_table(k, d);
    auto big = character_table(k, n);
    WreathGroup group(k, n);
    BigInt sub_order = wreath_group_order(k, d) * wreath_group_order(k, n - d);
    for (size_t s = 0; s < small->labels.size(); ++s) {
        ClassFunction ind = induce_with_trivial(small->characters[s], n);
        for (size_t b = 0; b < big->labels.size(); ++b) {
            BigRat lhs = inner_product(ind, big->characters[b]);
            // restriction side, summed over subgroup elements directly
            BigRat rhs = 0;
            for (long long i = 0; i < group.order(); ++i) {
                WreathElement x = group.element(i);
                bool in_sub = true;
                for (int slot = 0; slot < d; ++slot)
                    if (x.pi(slot) >= d) in_sub = false;
                if (!in_sub) continue;
                WreathElement first{k, {x.alpha.begin(), x.alpha.begin() + d},
                                    Permutation::identity(d)};  // d = 1 here
                rhs += small->characters[s].value_at(type_of(first)) *
                       big->characters[b].value_at(type_of(x));
            }
            rhs /= BigRat(sub_order);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("decompose") {
    auto table = character_table(2, 2);

    // an irreducible decomposes as itself
    for (size_t i = 0; i < table->labels.size(); ++i) {
        auto mults = decompose(table->characters[i]);
        REQUIRE(mults.size() == 1);
        CHECK(mults.begin()->first == table->labels[i]);
        CHECK(mults.begin()->second == 1);
    }

    // the regular character contains every irreducible with multiplicity
    // equal to its dimension
    auto reg = decompose(ClassFunction::regular(table->classes));
    for (size_t i = 0; i < table->labels.size(); ++i)
        CHECK(reg.at(table->labels[i]) == irrep_dimension(2, table->labels[i]));

    // non-characters are rejected
    ClassFunction bogus = table->characters[0] - table->characters[1];
    CHECK_THROWS_AS(decompose(bogus), std::domain_error);
}

TEST_CASE("pieri labels") {
    // one-row component: strips on a single row
    Multipartition delta1({Partition({2}), Partition()});
    auto out = pieri_labels(2, 2, delta1, 4);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == Multipartition({Partition({4}), Partition()}));
    CHECK(out[1] == Multipartition({Partition({3, 1}), Partition()}));
    CHECK(out[2] == Multipartition({Partition({2, 2}), Partition()}));

    // n = d: identity
    Multipartition delta2({Partition({1}), Partition({1, 1})});
    auto same = pieri_labels(2, 3, delta2, 3);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == delta2);

    // example with a dimension check: k=2, d=1, n=3
    Multipartition delta3({Partition({1}), Partition()});
    auto three = pieri_labels(2, 1, delta3, 3);
    REQUIRE(three.size() == 2);
    CHECK(three[0] == Multipartition({Partition({3}), Partition()}));
    CHECK(three[1] == Multipartition({Partition({2, 1}), Partition()}));
    CHECK(irrep_dimension(2, three[0]) + irrep_dimension(2, three[1]) == binomial(3, 1));
}

TEST_CASE("pieri decomposition agrees with brute-force induction") {
    for (auto [k, d, n] : {std::tuple{2, 1, 2}, std::tuple{2, 1, 3}, std::tuple{2, 2, 3},
                           std::tuple{1, 2, 4}}) {
        auto small = character_table(k, d);
        for (size_t s = 0; s < small->labels.size(); ++s) {
            auto mults = decompose(induce_with_trivial(small->characters[s], n));
            auto expected = pieri_labels(k, d, small->labels[s], n);
            CHECK(mults.size() == expected.size());
            BigInt dim_sum = 0;
            for (const auto& label : expected) {
                REQUIRE(mults.count(label) == 1);
                CHECK(mults.at(label) == 1);
                dim_sum += irrep_dimension(k, label);
            }
            CHECK(dim_sum == binomial(n, d) * irrep_dimension(k, small->labels[s]));
        }
    }
}

TEST_CASE("character table csv shape") {
    auto table = character_table(2, 2);
    std::string csv = character_table_to_csv(*table);
    CHECK(csv.rfind("label,dimension,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
