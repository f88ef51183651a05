#include "skeinlab/rmatrix.hpp"

#include <stdexcept>

namespace skeinlab {

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

const Mat2 kE{{{0, 0}, {1, 0}}};
const Mat2 kF{{{0, 1}, {0, 0}}};
const Mat2 kH{{{1, 0}, {0, -1}}};

DualMat4 kron(const Mat2& x, const Mat2& y, const Rational& scale) {
    DualMat4 out{};
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    out[2 * i1 + i2][2 * j1 + j2] = DualNumber(scale * x[i1][j1] * y[i2][j2]);
    return out;
}

DualMat4 first_order(const DualMat4& r, long sign) {
    DualMat4 out = dual_identity();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] += DualNumber(0, sign * r[i][j].value);
    return out;
}

}  // namespace

DualMat4 dual_identity() {
    DualMat4 out{};
    for (int i = 0; i < 4; ++i) out[i][i] = DualNumber(1);
    return out;
}

DualMat4 swap_tau() {
    DualMat4 out{};
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) out[2 * i2 + i1][2 * i1 + i2] = DualNumber(1);
    return out;
}

DualMat4 operator*(const DualMat4& x, const DualMat4& y) {
    DualMat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
}

DualMat4 operator+(const DualMat4& x, const DualMat4& y) {
    DualMat4 out = x;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] += y[i][j];
    return out;
}

DualMat4 scaled(const DualMat4& x, const DualNumber& s) {
    DualMat4 out = x;
    for (auto& row : out)
        for (auto& v : row) v *= s;
    return out;
}

DualMat4 inverse(const DualMat4& x) {
    DualMat4 m = x, inv = dual_identity();
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && m[piv][col].value == 0) ++piv;
        if (piv == 4) throw std::domain_error("matrix is not invertible modulo hbar");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const DualNumber s = m[col][col].inverse();
        for (int j = 0; j < 4; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const DualNumber f = m[r][col];
            if (f == DualNumber(0)) continue;
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

bool operator==(const DualMat4& x, const DualMat4& y) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (x[i][j] != y[i][j]) return false;
    return true;
}

DualMat4 classical_r_plus() { return kron(kH, kH, Rational(1, 2)) + kron(kE, kF, 2); }
DualMat4 classical_r_minus() { return kron(kH, kH, Rational(1, 2)) + kron(kF, kE, 2); }

DualMat4 quantum_r_matrix(const DualNumber& a_value) {
    const DualNumber a_inv = a_value.inverse();
    const DualNumber q = a_value * a_value;
    const DualNumber q_diff = q - q.inverse();
    // q^{H(x)H/2} acts on v_e1 (x) v_e2 by A^{e1 e2}.
    DualMat4 diag{};
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) diag[2 * i1 + i2][2 * i1 + i2] = i1 == i2 ? a_value : a_inv;
    const DualMat4 unipotent = dual_identity() + scaled(kron(kE, kF, 1), q_diff);
    return swap_tau() * diag * unipotent;
}

RMatrixReport verify_r_matrix_expansion() {
    RMatrixReport rep;
    const DualMat4 tau = swap_tau();
    const DualMat4 rp = classical_r_plus(), rm = classical_r_minus();
    const DualMat4 r = quantum_r_matrix(DualNumber(1, Rational(1, 2)));
    const DualMat4 r_inv = inverse(r);
    rep.r_tau_plus = r == tau * first_order(rp, 1);
    rep.r_minus_tau = r == first_order(rm, 1) * tau;
    rep.rinv_plus_tau = r_inv == first_order(rp, -1) * tau;
    rep.rinv_tau_minus = r_inv == tau * first_order(rm, -1);
    rep.tau_involution = tau * tau == dual_identity();

    const DualMat4 literal = quantum_r_matrix(DualNumber(1, 1));
    rep.literal_convention_holds = literal == tau * first_order(rp, 1);
    // The hbar part of tau R equals scale * r+ for some integer scale.
    const DualMat4 lin = tau * literal;
    for (long s = 1; s <= 4 && rep.literal_scale == 0; ++s) {
        bool match = true;
        for (int i = 0; i < 4 && match; ++i)
            for (int j = 0; j < 4 && match; ++j) match = lin[i][j].epsilon == s * rp[i][j].value;
        if (match) rep.literal_scale = s;
    }
    return rep;
}

std::string to_string(const DualMat4& m) {
    std::string out = "[";
    for (int i = 0; i < 4; ++i) {
        out += i ? ", [" : "[";
        for (int j = 0; j < 4; ++j) out += (j ? ", " : "") + m[i][j].to_string();
        out += "]";
    }
    return out + "]";
}

}  // namespace skeinlab
