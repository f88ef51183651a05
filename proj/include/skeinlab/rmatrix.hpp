#pragma once

#include "skeinlab/dual_number.hpp"

#include <array>
#include <string>

namespace skeinlab {

// 4x4 matrices over Q[hbar]/(hbar^2) in the basis (++, +-, -+, --).
using DualMat4 = std::array<std::array<DualNumber, 4>, 4>;

DualMat4 dual_identity();
DualMat4 swap_tau();
DualMat4 operator*(const DualMat4& x, const DualMat4& y);
DualMat4 operator+(const DualMat4& x, const DualMat4& y);
DualMat4 scaled(const DualMat4& x, const DualNumber& s);
DualMat4 inverse(const DualMat4& x);  // leading part must be invertible
bool operator==(const DualMat4& x, const DualMat4& y);

// 1/2 H(x)H + 2 E(x)F and 1/2 H(x)H + 2 F(x)E.
DualMat4 classical_r_plus();
DualMat4 classical_r_minus();

// tau o q^{H(x)H/2} o (1 + (q - q^-1) E(x)F) with A = a_value, q = A^2.
DualMat4 quantum_r_matrix(const DualNumber& a_value);

struct RMatrixReport {
    bool r_tau_plus = false;     // R = tau (1 + hbar r+)
    bool r_minus_tau = false;    // R = (1 + hbar r-) tau
    bool rinv_plus_tau = false;  // R^-1 = (1 - hbar r+) tau
    bool rinv_tau_minus = false; // R^-1 = tau (1 - hbar r-)
    bool tau_involution = false;
    // Same check with A = 1 + hbar (A^{1/2} read as exp(hbar/2)); the first-order
    // term then equals literal_scale * r+.
    bool literal_convention_holds = false;
    long literal_scale = 0;

    bool ok() const { return r_tau_plus && r_minus_tau && rinv_plus_tau && rinv_tau_minus && tau_involution; }
};

// Uses A = exp(hbar/2), i.e. A = 1 + hbar/2 and q = 1 + hbar to first order.
RMatrixReport verify_r_matrix_expansion();

std::string to_string(const DualMat4& m);

}  // namespace skeinlab
