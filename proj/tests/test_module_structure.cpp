#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathstab/class_functions.hpp"
#include "wreathstab/combinatorics.hpp"
#include "wreathstab/module_structure.hpp"
#include "wreathstab/ray_partitions.hpp"
#include "wreathstab/wreath_group.hpp"

using namespace wreathstab;

TEST_CASE("hom counts of the free module") {
    CHECK(md_hom_count(2, 3, 2) == 0);
    CHECK(md_hom_count(2, 2, 2) == wreath_group_order(2, 2));
    CHECK(md_hom_count(3, 3, 3) == wreath_group_order(3, 3));
    CHECK(md_hom_count(2, 1, 2) == 4);
    CHECK(md_hom_count(1, 2, 5) == 20);
}

TEST_CASE("induced module ranks") {
    CHECK(mt_rank(2, 1, 1) == 0);
    for (int n = 2; n <= 8; ++n) CHECK(mt_rank(2, 1, n) == binomial(n, 2));
    CHECK(mt_rank(1, 3, 5) == 15);

    // matches the degree of the brute-force induced character
    ClassFunction triv = ClassFunction::trivial(class_table(2, 1));
    ClassFunction ind = induce_with_trivial(triv, 3);
    CHECK(BigRat(mt_rank(1, 1, 3)) == ind.at_identity());
}

TEST_CASE("generator rank recovery") {
    std::vector<BigInt> quad;
    for (int n = 0; n <= 6; ++n) quad.push_back(binomial(n, 2));
    CHECK(generator_ranks(quad) == std::vector<BigInt>{0, 0, 1, 0, 0, 0, 0});

    std::vector<BigInt> ones(5, 1);
    CHECK(generator_ranks(ones) == std::vector<BigInt>{1, 0, 0, 0, 0});
}

TEST_CASE("recovery from a betti window of H^1 over R^{1,2}") {
    std::vector<BigInt> betti_window;
    for (int n = 0; n <= 6; ++n)
        betti_window.push_back(betti(ClusterType::uniform(2, n), 1, 2, 1));
    auto t = generator_ranks(betti_window);
    for (size_t m = 0; m < t.size(); ++m) {
        CHECK(t[m] >= 0);
        if (m > 2) CHECK(t[m] == 0);
    }
}

TEST_CASE("transform round trips") {
    std::vector<BigInt> t{3, 0, 2, 5, 0, 1};
    std::vector<BigInt> ranks;
    for (int n = 0; n < 10; ++n) ranks.push_back(predicted_rank(t, n));
    std::vector<BigInt> window(ranks.begin(), ranks.begin() + 6);
    CHECK(generator_ranks(window) == t);

    CHECK(predicted_rank({1}, 9) == 1);
    CHECK(predicted_rank({0, 0, 1}, 7) == binomial(7, 2));
}

TEST_CASE("a free-module rank sequence recovers a single spike") {
    for (int d = 0; d <= 4; ++d) {
        for (BigInt dim_t : {BigInt(1), BigInt(3), BigInt(17)}) {
            std::vector<BigInt> ranks;
            for (int n = 0; n <= d + 3; ++n) ranks.push_back(mt_rank(d, dim_t, n));
            auto t = generator_ranks(ranks);
            for (size_t m = 0; m < t.size(); ++m)
                CHECK(t[m] == (static_cast<int>(m) == d ? dim_t : BigInt(0)));
        }
    }
}

TEST_CASE("negative recovered ranks are reported, not clamped") {
    // a sequence no free module produces
    std::vector<BigInt> ranks{1, 0, 0};
    auto t = generator_ranks(ranks);
    CHECK(t[1] == -1);
}

TEST_CASE("multipartition padding") {
    Multipartition mp({Partition({1}), Partition({1, 1}), Partition({2})});

    auto at7 = pad_multipartition(mp, 7);
    REQUIRE(!at7.below_threshold);
    CHECK(at7.label ==
          Multipartition({Partition({2, 1}), Partition({1, 1}), Partition({2})}));

    auto at6 = pad_multipartition(mp, 6);
    REQUIRE(!at6.below_threshold);
    CHECK(at6.label ==
          Multipartition({Partition({1, 1}), Partition({1, 1}), Partition({2})}));

    CHECK(pad_multipartition(mp, 5).below_threshold);

    // all-empty pads to the trivial label
    Multipartition empty({Partition(), Partition(), Partition()});
    auto padded = pad_multipartition(empty, 4);
    REQUIRE(!padded.below_threshold);
    CHECK(padded.label == Multipartition({Partition({4}), Partition(), Partition()}));

    // consecutive paddings differ only in the first row of the first component
    for (int n = 6; n <= 10; ++n) {
        auto a = pad_multipartition(mp, n).label;
        auto b = pad_multipartition(mp, n + 1).label;
        CHECK(b.components[0].part(0) == a.components[0].part(0) + 1);
        for (size_t i = 1; i < a.components.size(); ++i)
            CHECK(a.components[i] == b.components[i]);
        std::vector<int> tail_a(a.components[0].parts().begin() + 1, a.components[0].parts().end());
        std::vector<int> tail_b(b.components[0].parts().begin() + 1, b.components[0].parts().end());
        CHECK(tail_a == tail_b);
    }
}

TEST_CASE("padding rejects an empty multipartition") {
    CHECK_THROWS_AS(pad_multipartition(Multipartition(), 3), std::invalid_argument);
}

TEST_CASE("stable ranges") {
    StableRanges zero = stable_ranges(0, 2, 1);
    CHECK(zero.rep_stab_onset == 0);
    CHECK(zero.unordered_onset == 0);

    StableRanges r = stable_ranges(2, 2, 1);
    CHECK(r.rep_stab_onset == 4);
    CHECK(r.rep_stab_theory_bound == 4);
    CHECK(r.unordered_onset == 2);
    CHECK(r.unordered_theory_bound == 2);
    CHECK(r.gen_deg_theory_bound == 2);

    StableRanges r23 = stable_ranges(1, 3, 2);
    CHECK(r23.rep_stab_theory_bound == 4);
    CHECK(r23.unordered_theory_bound == 2);

    CHECK_THROWS_AS(stable_ranges(5, 2, 1), std::logic_error);
    CHECK_THROWS_AS(stable_ranges(0, 1, 1), std::invalid_argument);
}
