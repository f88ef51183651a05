#pragma once

#include "skeinlab/rational.hpp"

#include <string>

namespace skeinlab {

// a + b*hbar in Q[hbar]/(hbar^2).
struct DualNumber {
    Rational value;
    Rational epsilon;

    DualNumber() = default;
    DualNumber(Rational v, Rational e = 0) : value(std::move(v)), epsilon(std::move(e)) {}

    static DualNumber hbar() { return {0, 1}; }

    DualNumber& operator+=(const DualNumber& o) {
        value += o.value;
        epsilon += o.epsilon;
        return *this;
    }
    DualNumber& operator-=(const DualNumber& o) {
        value -= o.value;
        epsilon -= o.epsilon;
        return *this;
    }
    DualNumber& operator*=(const DualNumber& o) {
        epsilon = value * o.epsilon + epsilon * o.value;
        value *= o.value;
        return *this;
    }
    friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
    friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
    friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
    DualNumber operator-() const { return {-value, -epsilon}; }

    // Requires value != 0.
    DualNumber inverse() const;

    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.value == b.value && a.epsilon == b.epsilon;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }

    std::string to_string() const;
};

}  // namespace skeinlab
