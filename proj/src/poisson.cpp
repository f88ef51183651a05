#include "skeinlab/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace skeinlab {

Poly4::Poly4(const Rational& constant) { add_term({0, 0, 0, 0}, constant); }

Poly4 Poly4::var(int i) {
    if (i < 0 || i > 3) throw std::out_of_range("variable index must be 0..3");
    Exponent e{0, 0, 0, 0};
    e[i] = 1;
    return monomial(e);
}

Poly4 Poly4::monomial(const Exponent& e, const Rational& coeff) {
    Poly4 p;
    p.add_term(e, coeff);
    return p;
}

void Poly4::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly4 Poly4::derivative(int i) const {
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

Poly4& Poly4::operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly4 operator*(const Poly4& x, const Poly4& y) {
    Poly4 out;
    for (const auto& [e, c] : x.terms_)
        for (const auto& [f, k] : y.terms_)
            out.add_term({e[0] + f[0], e[1] + f[1], e[2] + f[2], e[3] + f[3]}, c * k);
    return out;
}

Poly4 Poly4::operator-() const {
    Poly4 out;
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

std::string Poly4::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names = "abcd";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        std::string term;
        if (mono.empty()) term = skeinlab::to_string(mag);
        else if (mag == 1) term = mono;
        else term = skeinlab::to_string(mag) + "*" + mono;
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

Poly4 reduce_det(const Poly4& p) {
    Poly4 out;
    Poly4 pending = p;
    const Poly4 one_plus_bc = Poly4(Rational(1)) + Poly4::var(1) * Poly4::var(2);
    // Each pass lowers the a-degree of every mixed monomial, so this terminates.
    while (!pending.is_zero()) {
        Poly4 next;
        for (const auto& [e, c] : pending.terms()) {
            if (e[0] > 0 && e[3] > 0) {
                const int k = std::min(e[0], e[3]);
                Poly4 rest = Poly4::monomial({e[0] - k, e[1], e[2], e[3] - k}, c);
                for (int i = 0; i < k; ++i) rest = rest * one_plus_bc;
                next += rest;
            } else {
                out += Poly4::monomial(e, c);
            }
        }
        pending = next;
    }
    return out;
}

PoissonAlgebra::PoissonAlgebra(BracketVariant v) : variant_(v) {
    const Poly4 a = Poly4::var(0), b = Poly4::var(1), c = Poly4::var(2), d = Poly4::var(3);
    auto set = [this](int i, int j, const Poly4& value) {
        table_[i][j] = value;
        table_[j][i] = -value;
    };
    enum { A, B, C, D };
    if (v == BracketVariant::drinfeld) {
        set(A, B, -(a * b));
        set(A, C, -(a * c));
        set(B, C, Poly4());
        set(D, B, d * b);
        set(D, C, d * c);
        set(A, D, Poly4(Rational(-2)) * b * c);
    } else {
        set(C, D, Poly4(Rational(2)) * a * c);
        set(D, B, Poly4(Rational(2)) * a * b);
        set(D, A, Poly4());
        set(B, A, Poly4(Rational(2)) * a * b);
        set(A, C, Poly4(Rational(2)) * a * c);
        set(C, B, Poly4(Rational(2)) * a * (a - d));
    }
}

Poly4 PoissonAlgebra::bracket(const Poly4& f, const Poly4& h, bool reduce) const {
    Poly4 out;
    for (int i = 0; i < 4; ++i) {
        const Poly4 fi = f.derivative(i);
        if (fi.is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (i == j || table_[i][j].is_zero()) continue;
            const Poly4 hj = h.derivative(j);
            if (hj.is_zero()) continue;
            out += fi * hj * table_[i][j];
        }
    }
    return reduce ? reduce_det(out) : out;
}

Poly4 PoissonAlgebra::jacobiator(int x, int y, int z) const {
    const Poly4 px = Poly4::var(x), py = Poly4::var(y), pz = Poly4::var(z);
    return bracket(bracket(px, py), pz) + bracket(bracket(py, pz), px) + bracket(bracket(pz, px), py);
}

}  // namespace skeinlab
