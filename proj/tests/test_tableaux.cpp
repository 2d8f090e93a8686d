#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathstab/combinatorics.hpp"
#include "wreathstab/partitions.hpp"
#include "wreathstab/permutations.hpp"
#include "wreathstab/tableaux.hpp"

using namespace wreathstab;

TEST_CASE("permutation basics") {
    auto id = Permutation::identity(4);
    CHECK(id.is_identity());
    Permutation p({1, 2, 0, 3});
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.cycle_type() == Partition({3, 1}));
    auto cyc = p.cycles();
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{0, 1, 2});
    CHECK(cyc[1] == std::vector<int>{3});
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("adjacent transposition words recompose") {
    for (const auto& p : all_permutations(5)) {
        Permutation acc = Permutation::identity(5);
        for (int i : adjacent_transposition_word(p)) acc = acc * Permutation::transposition(5, i, i + 1);
        CHECK(acc == p);
    }
}

TEST_CASE("standard tableaux counts match the hook length formula") {
    for (int m = 1; m <= 7; ++m) {
        BigInt square_sum = 0;
        for (const auto& shape : partitions_of(m)) {
            BigInt f = shape.standard_tableaux_count();
            CHECK(BigInt(standard_tableaux(shape).size()) == f);
            square_sum += f * f;
        }
        CHECK(square_sum == factorial(m));
    }
}

TEST_CASE("symmetric group character values") {
    // trivial and sign representations
    for (int m = 1; m <= 6; ++m) {
        for (const auto& mu : partitions_of(m)) {
            CHECK(sn_character(Partition({m}), mu) == 1);
            int sign = 1;
            for (int part : mu.parts())
                if (part % 2 == 0) sign = -sign;
            CHECK(sn_character(Partition(std::vector<int>(m, 1)), mu) == sign);
        }
    }
    CHECK(sn_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(sn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(sn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(sn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK_THROWS_AS(sn_character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("character table rows are orthogonal") {
    // first orthogonality with the standard class sizes m! / prod(parts * multiplicities!)
    for (int m = 2; m <= 6; ++m) {
        auto shapes = partitions_of(m);
        auto classes = partitions_of(m);
        std::vector<BigInt> class_sizes;
        for (const auto& mu : classes) {
            BigInt z = 1;
            int run = 1;
            for (int i = 0; i < mu.length(); ++i) {
                z *= mu.parts()[i];
                if (i + 1 < mu.length() && mu.parts()[i + 1] == mu.parts()[i])
                    ++run;
                else {
                    z *= factorial(run);
                    run = 1;
                }
            }
            class_sizes.push_back(factorial(m) / z);
        }
        for (const auto& a : shapes)
            for (const auto& b : shapes) {
                BigInt dot = 0;
                for (size_t c = 0; c < classes.size(); ++c)
                    dot += class_sizes[c] * sn_character(a, classes[c]) * sn_character(b, classes[c]);
                CHECK(dot == (a == b ? factorial(m) : BigInt(0)));
            }
    }
}

TEST_CASE("natural representation small shapes") {
    auto triv = natural_rep_generators(Partition({3}));
    REQUIRE(triv.size() == 2);
    for (const auto& g : triv) CHECK(g == IntMatrix::identity(1));

    auto sign = natural_rep_generators(Partition({1, 1}));
    REQUIRE(sign.size() == 1);
    CHECK(sign[0].at(0, 0) == -1);
}

TEST_CASE("natural representation relations and traces") {
    for (int m = 2; m <= 5; ++m) {
        for (const auto& shape : partitions_of(m)) {
            auto gens = natural_rep_generators(shape);
            int f = static_cast<int>(shape.standard_tableaux_count());
            REQUIRE(static_cast<int>(gens.size()) == m - 1);
            auto I = IntMatrix::identity(f);
            for (int i = 0; i < m - 1; ++i) {
                CHECK(gens[i] * gens[i] == I);
                if (i + 1 < m - 1) {
                    auto ab = gens[i] * gens[i + 1];
                    CHECK(ab * ab * ab == I);
                }
                for (int j = i + 2; j < m - 1; ++j)
                    CHECK(gens[i] * gens[j] == gens[j] * gens[i]);
            }
            // trace of any permutation matrix equals the character of its cycle type
            for (const auto& p : all_permutations(m)) {
                auto mat = natural_rep_matrix(gens, f, p);
                CHECK(BigInt(mat.trace()) == sn_character(shape, p.cycle_type()));
            }
        }
    }
}
