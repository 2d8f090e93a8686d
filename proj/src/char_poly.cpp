#include "wreathstab/char_poly.hpp"

#include <stdexcept>

namespace wreathstab {

int CharacterPolynomial::degree() const {
    int deg = -1;
    for (const auto& [mono, coeff] : terms_) {
        int d = 0;
        for (const auto& [var, exp] : mono) d += var.cycle_length * exp;
        deg = std::max(deg, d);
    }
    return deg;
}

void CharacterPolynomial::add_term(const Monomial& m, const BigRat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CharacterPolynomial CharacterPolynomial::operator+(const CharacterPolynomial& rhs) const {
    if (k_ != rhs.k_) throw std::invalid_argument("CharacterPolynomial: base group mismatch");
    CharacterPolynomial out = *this;
    for (const auto& [mono, coeff] : rhs.terms_) out.add_term(mono, coeff);
    return out;
}

CharacterPolynomial CharacterPolynomial::operator*(const CharacterPolynomial& rhs) const {
    if (k_ != rhs.k_) throw std::invalid_argument("CharacterPolynomial: base group mismatch");
    CharacterPolynomial out(k_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (const auto& [var, exp] : mb) m[var] += exp;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

CharacterPolynomial CharacterPolynomial::constant(int k, const BigRat& c) {
    CharacterPolynomial p(k);
    p.add_term({}, c);
    return p;
}

CharacterPolynomial CharacterPolynomial::variable(int k, const CharVariable& v) {
    CharacterPolynomial p(k);
    p.add_term({{v, 1}}, 1);
    return p;
}

CharacterPolynomial CharacterPolynomial::falling_binomial(int k, const CharVariable& v, int c) {
    if (c < 0) throw std::invalid_argument("falling_binomial: negative count");
    CharacterPolynomial p = constant(k, 1);
    for (int j = 0; j < c; ++j) p = p * (variable(k, v) + constant(k, -j));
    return p * constant(k, BigRat(1) / BigRat(factorial(c)));
}

BigRat CharacterPolynomial::evaluate(const TypeMatrix& t) const {
    if (t.k != k_)
        throw std::invalid_argument("CharacterPolynomial: type matrix over a different base group");
    BigRat total = 0;
    for (const auto& [mono, coeff] : terms_) {
        BigRat term = coeff;
        for (const auto& [var, exp] : mono) {
            BigRat value = t.count_of(var.g_class, var.cycle_length);
            for (int e = 0; e < exp; ++e) term *= value;
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

std::string CharacterPolynomial::to_json() const {
    std::string s = "[";
    bool first_term = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first_term) s += ',';
        first_term = false;
        s += "{\"vars\":[";
        bool first_var = true;
        for (const auto& [var, exp] : mono) {
            if (!first_var) s += ',';
            first_var = false;
            s += "{\"class\":[";
            const auto& parts = var.g_class.parts();
            for (size_t j = 0; j < parts.size(); ++j) {
                if (j) s += ',';
                s += std::to_string(parts[j]);
            }
            s += "],\"cycleLength\":" + std::to_string(var.cycle_length) +
                 ",\"exponent\":" + std::to_string(exp) + '}';
        }
        s += "],\"coeff\":\"" + coeff.str() + "\"}";
    }
    s += ']';
    return s;
}

CharacterPolynomial character_polynomial_mt(const ClassFunction& chi_t) {
    int k = chi_t.k();
    CharacterPolynomial out(k);
    for (size_t c = 0; c < chi_t.table().classes.size(); ++c) {
        const BigRat& coeff = chi_t.value(static_cast<int>(c));
        if (coeff == 0) continue;
        CharacterPolynomial product = CharacterPolynomial::constant(k, coeff);
        for (const auto& entry : chi_t.table().classes[c].type.entries)
            product = product * CharacterPolynomial::falling_binomial(
                                    k, {entry.g_class, entry.length}, entry.count);
        out = out + product;
    }
    return out;
}

}  // namespace wreathstab
