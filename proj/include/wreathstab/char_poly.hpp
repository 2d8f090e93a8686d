#pragma once

#include <map>
#include <string>
#include <vector>

#include "wreathstab/class_functions.hpp"
#include "wreathstab/numbers.hpp"
#include "wreathstab/partitions.hpp"
#include "wreathstab/wreath_group.hpp"

namespace wreathstab {

// One coloured cycle-counting variable: counts cycles of a given length
// whose cycle product lies in a given class of S_k. Graded with
// degree = cycle length.
struct CharVariable {
    Partition g_class;
    int cycle_length = 1;

    friend bool operator==(const CharVariable&, const CharVariable&) = default;
    friend auto operator<=>(const CharVariable& a, const CharVariable& b) {
        return std::tie(a.g_class, a.cycle_length) <=> std::tie(b.g_class, b.cycle_length);
    }
};

// A polynomial with rational coefficients in the coloured cycle-counting
// variables of one base group S_k. Evaluable on any type matrix over S_k,
// for any n.
class CharacterPolynomial {
public:
    using Monomial = std::map<CharVariable, int>;  // variable -> exponent >= 1

    explicit CharacterPolynomial(int k) : k_(k) {}

    int k() const { return k_; }
    const std::map<Monomial, BigRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // max over monomials of sum cycle_length * exponent; -1 for the zero
    // polynomial
    int degree() const;

    void add_term(const Monomial& m, const BigRat& coeff);
    CharacterPolynomial operator+(const CharacterPolynomial& rhs) const;
    CharacterPolynomial operator*(const CharacterPolynomial& rhs) const;

    static CharacterPolynomial constant(int k, const BigRat& c);
    static CharacterPolynomial variable(int k, const CharVariable& v);

    // X(X-1)...(X-c+1)/c! as a polynomial in the single variable v.
    static CharacterPolynomial falling_binomial(int k, const CharVariable& v, int c);

    BigRat evaluate(const TypeMatrix& t) const;

    std::string to_json() const;  // monomial list [{vars, coeff}]

    friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

private:
    int k_;
    std::map<Monomial, BigRat> terms_;
};

// The character polynomial of the induced module M(T)_n built from a
// character chi_T of S_k wr S_d: for every n its evaluation on a class of
// S_k wr S_n equals the character of M(T)_n there. Degree is at most d,
// exactly d when chi_T is nonzero. Cycle-length variables range over
// lengths 1..d (a length-0 factor would be vacuous).
CharacterPolynomial character_polynomial_mt(const ClassFunction& chi_t);

}  // namespace wreathstab
