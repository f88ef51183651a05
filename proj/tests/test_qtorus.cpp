#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/qtorus.hpp"

#include <random>

using namespace skeinlab;

namespace {

QuantumTorusPtr delta_torus(int g, long n) {
    return std::make_shared<const QuantumTorus>(BalancedLattice(sigma_g_star(g)).skew_lattice(), n);
}

LatticeVector random_vector(std::mt19937& rng, std::size_t n, long r) {
    std::uniform_int_distribution<long> d(-r, r);
    LatticeVector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

LatticeVector neg(const LatticeVector& a) {
    LatticeVector out(a);
    for (auto& x : out) x = -x;
    return out;
}

// Oracle for A^{-(a,b)/4} with A = zeta_N: the unique k mod N with 4k = -(a,b).
long quarter_exponent(long pairing, long n) {
    for (long k = 0; k < n; ++k)
        if (mod_floor(4 * k + pairing, n) == 0) return k;
    return -1;
}

}  // namespace

TEST_CASE("Weyl-normalized product rule") {
    std::mt19937 rng(1);
    for (long n : {3L, 5L, 7L}) {
        auto t = delta_torus(1, n);
        for (int trial = 0; trial < 30; ++trial) {
            const LatticeVector a = random_vector(rng, t->rank(), 3), b = random_vector(rng, t->rank(), 3);
            const long k = quarter_exponent(t->pairing(a, b), n);
            CHECK(mod_floor(t->twist(a, b), n) == k);
            const TorusElement lhs = TorusElement::monomial(t, a) * TorusElement::monomial(t, b);
            const TorusElement rhs = TorusElement::monomial(t, add(a, b)).scaled(Cyclotomic::zeta(n, k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("commutation, inverses and associativity") {
    std::mt19937 rng(2);
    auto t = delta_torus(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const LatticeVector a = random_vector(rng, 5, 2), b = random_vector(rng, 5, 2), c = random_vector(rng, 5, 2);
        const TorusElement za = TorusElement::monomial(t, a), zb = TorusElement::monomial(t, b),
                           zc = TorusElement::monomial(t, c);
        CHECK((za * zb) * zc == za * (zb * zc));
        CHECK(za * zb == (zb * za).scaled(t->commutation_factor(t->pairing(a, b))));
        CHECK(za * TorusElement::monomial(t, neg(a)) == TorusElement::constant(t, Cyclotomic::one(5)));
        const TorusElement x = za + zb.scaled(Cyclotomic::zeta(5, 2));
        CHECK(x.pow(3) == x * x * x);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("center basis is the mod-N kernel") {
    for (long n : {3L, 5L}) {
        auto t = delta_torus(1, n);
        CHECK(t->center_basis() == form_kernel_mod(t->lattice(), n));
        for (std::size_t i = 0; i < t->center_basis().rows(); ++i)
            CHECK(is_central(TorusElement::monomial(t, t->center_basis().row_long(i))));
    }
    auto t = delta_torus(1, 3);
    CHECK_FALSE(is_central(TorusElement::monomial(t, {1, 0, 0, 0, 0})));
}

TEST_CASE("Frobenius images are central and Chebyshev agrees with Frobenius") {
    std::mt19937 rng(4);
    for (long n : {3L, 5L, 7L}) {
        for (int g = 1; g <= 2; ++g) {
            auto t = delta_torus(g, n);
            const int samples = g == 1 ? 20 : 5;
            for (int s = 0; s < samples; ++s) {
                const LatticeVector a = random_vector(rng, t->rank(), 2);
                const TorusElement x = TorusElement::monomial(t, a) + TorusElement::monomial(t, neg(a));
                CHECK(is_central(frobenius(x)));
                CHECK(chebyshev_apply(x, n) == frobenius(x));
            }
        }
    }
}

TEST_CASE("Chebyshev polynomials use the trace normalization") {
    auto t = delta_torus(1, 3);
    const TorusElement x = TorusElement::monomial(t, {1, 0, 0, 0, 0});
    CHECK(chebyshev_apply(x, 0) == TorusElement::constant(t, Cyclotomic(3, Rational(2))));
    CHECK(chebyshev_apply(x, 1) == x);
    CHECK(chebyshev_apply(x, 2) == x * x - TorusElement::constant(t, Cyclotomic(3, Rational(2))));
}

TEST_CASE("irreducible representations of K_Delta1") {
    for (long n : {3L, 5L}) {
        auto t = delta_torus(1, n);
        CentralCharacter chi = trivial_character(*t);
        chi.values[0] = Cyclotomic::zeta(static_cast<int>(n), 1);
        const TorusIrrep rho = build_irrep(*t, chi);
        CHECK(rho.dimension == static_cast<std::size_t>(n * n));
        const IrrepCheck serial = verify_irrep_serial(*t, rho);
        const IrrepCheck omp = verify_irrep_omp(*t, rho);
        CHECK(serial.ok());
        CHECK(omp.relation_checks == serial.relation_checks);
        CHECK(omp.center_checks == serial.center_checks);
        CHECK(omp.ok());
        // Central monomials act by the prescribed scalar.
        for (std::size_t i = 0; i < t->center_basis().rows(); ++i) {
            const LatticeVector v = t->center_basis().row_long(i);
            const CycloMatrix m = image_of_monomial(*t, rho, v);
            CHECK(m.is_scalar(chi.evaluate(v).embed(rho.field_order)));
            CHECK(m == CycloMatrix::scalar(rho.dimension, chi.evaluate(v).embed(rho.field_order)));
        }
    }
}

TEST_CASE("representation matrices satisfy the product rule on random monomials") {
    std::mt19937 rng(8);
    auto t = delta_torus(1, 3);
    const TorusIrrep rho = build_irrep(*t, trivial_character(*t));
    for (int trial = 0; trial < 10; ++trial) {
        const LatticeVector a = random_vector(rng, 5, 2), b = random_vector(rng, 5, 2);
        const Cyclotomic phase = Cyclotomic::zeta(3, t->twist(a, b)).embed(rho.field_order);
        CHECK(image_of_monomial(*t, rho, a) * image_of_monomial(*t, rho, b) ==
              image_of_monomial(*t, rho, add(a, b)) * phase);
    }
}

TEST_CASE("Weyl plane and genus two dimensions") {
    auto w = std::make_shared<const QuantumTorus>(SkewLattice("weyl", {"x", "y"}, IntMatrix{{0, 1}, {-1, 0}}), 5);
    const TorusIrrep rw = build_irrep(*w, trivial_character(*w));
    CHECK(rw.dimension == 5);
    CHECK(verify_irrep_omp(*w, rw).ok());

    auto t2 = delta_torus(2, 3);
    const TorusIrrep r2 = build_irrep(*t2, trivial_character(*t2));
    CHECK(r2.dimension == 243);
    CHECK(verify_irrep_omp(*t2, r2).ok());
    CHECK_THROWS(build_irrep(*delta_torus(2, 5), trivial_character(*delta_torus(2, 5))));
}

TEST_CASE("characters must be multiplicative") {
    auto t = delta_torus(1, 3);
    const CentralCharacter triv = trivial_character(*t);
    CHECK(triv.evaluate(t->center_basis().row_long(0)).is_one());
    CHECK_THROWS(triv.evaluate({1, 0, 0, 0, 0}));
    std::vector<Cyclotomic> values(t->center_basis().rows(), Cyclotomic::one(3));
    const LatticeVector v0 = t->center_basis().row_long(0);
    CHECK_THROWS(make_character(*t, values, {{v0, Cyclotomic::zeta(3, 1)}}));
    CHECK_NOTHROW(make_character(*t, values, {{v0, Cyclotomic::one(3)}}));
}
