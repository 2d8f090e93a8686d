#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <tuple>

#include "wreathstab/char_poly.hpp"
#include "wreathstab/class_functions.hpp"
#include "wreathstab/wreath_chars.hpp"

using namespace wreathstab;

TEST_CASE("falling binomial expansion") {
    CharVariable x{Partition({1}), 1};
    auto p = CharacterPolynomial::falling_binomial(1, x, 2);  // X(X-1)/2
    TypeMatrix t;
    t.k = 1;
    t.n = 4;
    t.entries = {{Partition({1}), 1, 4}};
    CHECK(p.evaluate(t) == 6);  // C(4,2)
    CHECK(p.degree() == 2);
    CHECK(CharacterPolynomial::falling_binomial(1, x, 0) ==
          CharacterPolynomial::constant(1, 1));
}

TEST_CASE("degree zero polynomial is the dimension constant") {
    ClassFunction triv = ClassFunction::trivial(class_table(2, 0));
    auto p = character_polynomial_mt(triv);
    CHECK(p.degree() == 0);
    CHECK(p.evaluate(identity_type(2, 5)) == 1);
}

TEST_CASE("k = 1 trivial generator gives the fixed-point count X_1") {
    ClassFunction triv = ClassFunction::trivial(class_table(1, 1));
    auto p = character_polynomial_mt(triv);
    CHECK(p == CharacterPolynomial::variable(1, {Partition({1}), 1}));
    CHECK(p.evaluate(identity_type(1, 7)) == 7);
}

TEST_CASE("(k,d) = (2,1) trivial generator counts coloured fixed slots") {
    ClassFunction triv = ClassFunction::trivial(class_table(2, 1));
    auto p = character_polynomial_mt(triv);
    auto expected = CharacterPolynomial::variable(2, {Partition({1, 1}), 1}) +
                    CharacterPolynomial::variable(2, {Partition({2}), 1});
    CHECK(p == expected);
}

TEST_CASE("constant polynomial evaluates to its value on every class") {
    auto p = CharacterPolynomial::constant(2, BigRat(5, 3));
    for (const auto& c : class_table(2, 3)->classes) CHECK(p.evaluate(c.type) == BigRat(5, 3));
}

TEST_CASE("polynomial degree is at most d, with equality for nonzero characters") {
    for (auto [k, d] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{1, 3}}) {
        auto table = character_table(k, d);
        for (const auto& chi : table->characters) {
            auto p = character_polynomial_mt(chi);
            CHECK(p.degree() == d);
        }
    }
}

TEST_CASE("evaluation matches brute-force induced characters exactly") {
    for (auto [k, d, n] : {std::tuple{2, 1, 2}, std::tuple{2, 1, 3}, std::tuple{2, 2, 3},
                           std::tuple{1, 2, 4}}) {
        auto small = character_table(k, d);
        auto big = class_table(k, n);
        for (const auto& chi : small->characters) {
            auto p = character_polynomial_mt(chi);
            ClassFunction ind = induce_with_trivial(chi, n);
            for (const auto& c : big->classes) CHECK(p.evaluate(c.type) == ind.value_at(c.type));
        }
    }
}

TEST_CASE("evaluation rejects mismatched base groups") {
    auto p = CharacterPolynomial::variable(2, {Partition({2}), 1});
    CHECK_THROWS_AS(p.evaluate(identity_type(3, 2)), std::invalid_argument);
}

TEST_CASE("json serialization") {
    auto p = CharacterPolynomial::variable(2, {Partition({1, 1}), 1});
    CHECK(p.to_json() ==
          "[{\"vars\":[{\"class\":[1,1],\"cycleLength\":1,\"exponent\":1}],\"coeff\":\"1\"}]");
    CHECK(CharacterPolynomial(2).to_json() == "[]");
}
