#pragma once

#include "skeinlab/rational.hpp"

#include <vector>

namespace skeinlab {

// Immutable per-order context: Phi_m and reduced powers of zeta_m.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    // Coefficients of Phi_m, low degree first, monic.
    const std::vector<Integer>& modulus() const { return modulus_; }
    // Trimmed coefficient vector of zeta^k, k taken mod m.
    const std::vector<Rational>& zeta_power(long k) const;

private:
    explicit CyclotomicField(int order);

    int order_;
    int degree_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Rational>> powers_;
};

std::vector<Integer> cyclotomic_polynomial(int m);

// Element of Q(zeta_m) stored as a residue modulo Phi_m. Trailing zero
// coefficients are trimmed, so zero has an empty vector and equality is
// coefficientwise.
class Cyclotomic {
public:
    explicit Cyclotomic(int order = 1);
    Cyclotomic(int order, const Rational& q);
    Cyclotomic(int order, std::vector<Rational> coeffs);

    static Cyclotomic zeta(int order, long k = 1);
    static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }

    int order() const { return field_->order(); }
    const CyclotomicField& field() const { return *field_; }
    // Full length phi(m) coefficient vector.
    std::vector<Rational> coeffs() const;
    const std::vector<Rational>& trimmed() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_value() const;  // throws unless is_rational()

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    // Re-expresses this value in Q(zeta_target); target must be a multiple of order().
    Cyclotomic embed(int target) const;
    // If this equals +-zeta^k return (k, sign); otherwise k = -1.
    std::pair<long, int> as_signed_root() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    Cyclotomic& operator*=(const Rational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    Cyclotomic operator-() const;

    // Multiply by zeta^k without a general product.
    Cyclotomic times_zeta(long k) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same(const Cyclotomic& o) const;
    void trim();

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

}  // namespace skeinlab
