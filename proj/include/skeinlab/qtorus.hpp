#pragma once

#include "skeinlab/cyclo_matrix.hpp"
#include "skeinlab/lattice.hpp"

#include <map>
#include <memory>
#include <vector>

namespace skeinlab {

using LatticeVector = std::vector<long>;

// T_q(E) at A = zeta_N: Z_a Z_b = A^{-(a,b)/4} Z_{a+b} with A^{1/4} = A^{h^2},
// h = (N+1)/2.
class QuantumTorus {
public:
    QuantumTorus(SkewLattice lattice, long n);

    const SkewLattice& lattice() const { return lattice_; }
    long n() const { return n_; }
    long half() const { return h_; }
    std::size_t rank() const { return lattice_.rank(); }
    long pairing(const LatticeVector& a, const LatticeVector& b) const;
    // Exponent k with A^{-(a,b)/4} = zeta^k.
    long twist(const LatticeVector& a, const LatticeVector& b) const;
    // zeta^{-w h}, the commutation factor A^{-w/2}.
    Cyclotomic commutation_factor(long w) const;
    const IntMatrix& center_basis() const { return center_; }  // HNF of the mod-N kernel

private:
    SkewLattice lattice_;
    long n_;
    long h_;
    IntMatrix center_;
};

using QuantumTorusPtr = std::shared_ptr<const QuantumTorus>;

class TorusElement {
public:
    explicit TorusElement(QuantumTorusPtr t) : torus_(std::move(t)) {}

    static TorusElement monomial(QuantumTorusPtr t, const LatticeVector& a);
    static TorusElement constant(QuantumTorusPtr t, const Cyclotomic& c);

    const QuantumTorusPtr& torus() const { return torus_; }
    const std::map<LatticeVector, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LatticeVector& a, const Cyclotomic& c);

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    TorusElement scaled(const Cyclotomic& c) const;
    TorusElement pow(unsigned long e) const;

    friend bool operator==(const TorusElement& a, const TorusElement& b);
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

private:
    void check_same(const TorusElement& o) const;

    QuantumTorusPtr torus_;
    std::map<LatticeVector, Cyclotomic> terms_;
};

// Z_a -> Z_{Na}; coefficients must be rational.
TorusElement frobenius(const TorusElement& x);
// T_0 = 2, T_1 = X, T_{k+1} = X T_k - T_{k-1}.
TorusElement chebyshev_apply(const TorusElement& x, long degree);
bool is_central(const TorusElement& x);

// Character on the mod-N kernel E0, given on its HNF basis rows.
struct CentralCharacter {
    IntMatrix kernel_basis;
    std::vector<Cyclotomic> values;

    // chi(Z_v) for v in E0 (lattice coordinates); throws if v is not in E0.
    Cyclotomic evaluate(const LatticeVector& v) const;
};

CentralCharacter trivial_character(const QuantumTorus& t);
// Values on the HNF basis, plus optional extra (vector, value) constraints that
// must agree with the multiplicative extension.
CentralCharacter make_character(const QuantumTorus& t, std::vector<Cyclotomic> basis_values,
                                const std::vector<std::pair<LatticeVector, Cyclotomic>>& extra = {});

struct TorusIrrep {
    std::size_t dimension = 0;
    int field_order = 1;                    // matrices live over Q(zeta_field_order)
    std::vector<CycloMatrix> generators;    // images of Z_{e_k}, original basis
    std::vector<CycloMatrix> inverses;
    CentralCharacter character;
    std::vector<Integer> block_invariants;  // symplectic d_i
};

constexpr std::size_t kMaxIrrepDimension = 2000;

TorusIrrep build_irrep(const QuantumTorus& t, const CentralCharacter& chi);

// rho(Z_v) from generator images.
CycloMatrix image_of_monomial(const QuantumTorus& t, const TorusIrrep& rho, const LatticeVector& v);

struct IrrepCheck {
    std::size_t relation_checks = 0;
    std::size_t relation_failures = 0;
    std::size_t center_checks = 0;
    std::size_t center_failures = 0;
    bool ok() const { return relation_failures == 0 && center_failures == 0; }
};

IrrepCheck verify_irrep_serial(const QuantumTorus& t, const TorusIrrep& rho);
IrrepCheck verify_irrep_omp(const QuantumTorus& t, const TorusIrrep& rho);

}  // namespace skeinlab
