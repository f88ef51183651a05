#pragma once

#include "skeinlab/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace skeinlab {

// Polynomial in the matrix coordinates a, b, c, d over Q.
class Poly4 {
public:
    using Exponent = std::array<int, 4>;

    Poly4() = default;
    Poly4(const Rational& constant);
    static Poly4 var(int i);  // 0..3 = a, b, c, d
    static Poly4 monomial(const Exponent& e, const Rational& coeff = 1);

    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Partial derivative in variable i.
    Poly4 derivative(int i) const;

    Poly4& operator+=(const Poly4& o);
    Poly4& operator-=(const Poly4& o);
    friend Poly4 operator+(Poly4 x, const Poly4& y) { return x += y; }
    friend Poly4 operator-(Poly4 x, const Poly4& y) { return x -= y; }
    friend Poly4 operator*(const Poly4& x, const Poly4& y);
    Poly4 operator-() const;
    friend bool operator==(const Poly4& x, const Poly4& y) { return x.terms_ == y.terms_; }

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

// Normal form modulo ad - bc - 1: no monomial contains both a and d.
Poly4 reduce_det(const Poly4& p);

enum class BracketVariant { drinfeld, sts };

class PoissonAlgebra {
public:
    explicit PoissonAlgebra(BracketVariant v);

    BracketVariant variant() const { return variant_; }
    const Poly4& generator_bracket(int i, int j) const { return table_[i][j]; }
    // Leibniz extension: sum over i, j of d_i f d_j h {x_i, x_j}.
    Poly4 bracket(const Poly4& f, const Poly4& h, bool reduce = false) const;
    // {{x,y},z} + cyclic for generators.
    Poly4 jacobiator(int x, int y, int z) const;

private:
    BracketVariant variant_;
    std::array<std::array<Poly4, 4>, 4> table_;
};

}  // namespace skeinlab
