#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/detect.hpp"
#include "skeinlab/poisson.hpp"
#include "skeinlab/rmatrix.hpp"
#include "skeinlab/sl2.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace skeinlab;

namespace {

Cyclotomic c4(long n) { return Cyclotomic(4, Rational(n)); }
const Cyclotomic kI = Cyclotomic::zeta(4, 1);

SL2Mat mat(long a, long b, long c, long d) { return SL2Mat(c4(a), c4(b), c4(c), c4(d)); }

// Quaternion oracle: unit quaternions +-1, +-i, +-j, +-k as integer 4-tuples.
using Quat = std::array<int, 4>;

Quat qmul(const Quat& x, const Quat& y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

Quat qinv(const Quat& x) { return {x[0], -x[1], -x[2], -x[3]}; }

std::vector<Quat> q8_elements() {
    std::vector<Quat> out;
    for (int axis = 0; axis < 4; ++axis)
        for (int s : {1, -1}) {
            Quat q{0, 0, 0, 0};
            q[axis] = s;
            out.push_back(q);
        }
    return out;
}

// Orbit sizes of (A, B) pairs under (A, BA) and (AB^-1, B).
std::vector<std::size_t> q8_orbit_sizes() {
    using Pair = std::pair<Quat, Quat>;
    std::set<Pair> unseen;
    for (const Quat& x : q8_elements())
        for (const Quat& y : q8_elements()) unseen.insert({x, y});
    std::vector<std::size_t> sizes;
    while (!unseen.empty()) {
        std::vector<Pair> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        std::size_t n = 0;
        while (!stack.empty()) {
            const auto [x, y] = stack.back();
            stack.pop_back();
            ++n;
            for (const Pair& next : {Pair{x, qmul(y, x)}, Pair{qmul(x, qinv(y)), y}})
                if (unseen.erase(next)) stack.push_back(next);
        }
        sizes.push_back(n);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Poly4 random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 2), coef(-3, 3);
    Poly4 p;
    for (int t = 0; t < 3; ++t) p += Poly4::monomial({e(rng), e(rng), e(rng), e(rng)}, coef(rng));
    return p;
}

}  // namespace

TEST_CASE("SL2 matrices") {
    CHECK_THROWS(mat(1, 1, 1, 1));
    const SL2Mat m = mat(2, 1, 1, 1);
    CHECK(m * m.inverse() == SL2Mat::identity(4));
    CHECK(m.trace() == c4(3));
    CHECK(mat(-1, 0, 0, -1).is_central());
    CHECK_FALSE(m.is_central());
    CHECK(m.embed(12) == m);
    CHECK(m.embed(12).order() == 12);
}

TEST_CASE("moment map fixtures") {
    // [A, B] for A = [[0,1],[-1,0]], B = [[1,1],[0,1]], multiplied out by hand.
    const SL2Rep rho(1, {mat(0, 1, -1, 0), mat(1, 1, 0, 1)});
    CHECK(moment_map(rho) == mat(1, -1, -1, 2));
    CHECK(classify_cell(rho) == Cell::big);
    CHECK(moment_map(SL2Rep::trivial(2, 4)) == SL2Mat::identity(4));
    CHECK(evaluate_word(rho, {1, 1}) == mat(-1, 0, 0, -1));

    // A reduced-cell point: B = [[1,0],[i,1]] makes the (1,1) entry w^2 + z^2 vanish.
    const SL2Rep red(1, {mat(0, 1, -1, 0), SL2Mat(c4(1), c4(0), kI, c4(1))});
    const SL2Mat mu = moment_map(red);
    CHECK(mu.a().is_zero());
    CHECK(mu.c() == -kI);
    CHECK(classify_cell(red) == Cell::reduced);
}

TEST_CASE("action of twists and invariance of the moment map") {
    const SL2Rep rho(1, {mat(2, 1, 1, 1), mat(1, 1, 0, 1)});
    const SL2Rep ta = act(twist_alpha(), rho);
    CHECK(ta.images[0] == rho.images[0]);
    CHECK(ta.images[1] == rho.images[1] * rho.images[0]);
    const SL2Rep tb = act(twist_beta(), rho);
    CHECK(tb.images[0] == rho.images[0] * rho.images[1].inverse());
    CHECK(tb.images[1] == rho.images[1]);

    std::mt19937 rng(3);
    SL2Rep cur = rho;
    const SL2Mat mu = moment_map(rho);
    for (int step = 0; step < 40; ++step) {
        cur = act(rng() % 2 ? twist_alpha() : twist_beta(), cur);
        CHECK(moment_map(cur) == mu);
    }
    // Precomposition makes this a right action.
    const auto phi = twist_alpha(), psi = twist_beta();
    CHECK(act(phi.compose(psi), rho) == act(psi, act(phi, rho)));
}

TEST_CASE("symplectic leaves") {
    const LeafDescriptor id = classify_sts_leaf(SL2Mat::identity(4));
    CHECK(id.cell == 0);
    CHECK(id.kind == ConjugacyKind::central_plus);
    CHECK_FALSE(id.dressing_b.has_value());
    CHECK(classify_sts_leaf(mat(-1, 0, 0, -1)).kind == ConjugacyKind::central_minus);
    CHECK(classify_sts_leaf(mat(1, 1, 0, 1)).kind == ConjugacyKind::parabolic_plus);
    CHECK(classify_sts_leaf(mat(-1, 1, 0, -1)).kind == ConjugacyKind::parabolic_minus);
    const LeafDescriptor rot = classify_sts_leaf(mat(0, 1, -1, 0));
    CHECK(rot.kind == ConjugacyKind::semisimple);
    CHECK(rot.cell == 1);
    REQUIRE(rot.dressing_b.has_value());
    CHECK(*rot.dressing_b == c4(1));
    CHECK(to_string(ConjugacyKind::parabolic_minus).size() > 0);

    const SL2Mat g = mat(2, 1, 1, 1);
    CHECK(classify_double_leaf(g, g) == std::pair<int, int>{0, 0});
    CHECK(classify_double_leaf(mat(0, 1, -1, 0), SL2Mat::identity(4)) == std::pair<int, int>{1, 1});
    CHECK(classify_double_leaf(g * mat(0, 1, -1, 0), g) == std::pair<int, int>{1, 0});
}

TEST_CASE("toric action") {
    const Cyclotomic z = Cyclotomic::zeta(5, 1);
    const SL2Mat m = mat(0, 1, -1, 0);
    const SL2Mat t = toric_action(z, m);
    CHECK(t.order() == 20);
    CHECK(t == SL2Mat(Cyclotomic(5), Cyclotomic::zeta(5, 2), -Cyclotomic::zeta(5, -2), Cyclotomic(5)));
    CHECK(toric_action(z.inverse(), t) == m);
    CHECK_THROWS(toric_action(Cyclotomic(5), m));
}

TEST_CASE("quaternion group and finite Hom spaces") {
    const auto q8 = group_closure(quaternion_generators());
    CHECK(q8.size() == 8);
    CHECK(std::is_sorted(q8.begin(), q8.end(), [](const SL2Mat& x, const SL2Mat& y) { return x.key() < y.key(); }));
    CHECK(enumerate_hom_to_finite(q8, 1).size() == 64);
    CHECK(enumerate_hom_to_finite({SL2Mat::identity(4)}, 2).size() == 1);
    CHECK(enumerate_hom_to_finite(group_closure({mat(-1, 0, 0, -1)}), 1).size() == 4);
    CHECK_THROWS_AS(group_closure(quaternion_generators(), 5), CapError);
    CHECK_THROWS(enumerate_hom_to_finite(q8, 2, 100));
}

TEST_CASE("twist orbits on Hom(pi_1, Q8) match the quaternion oracle") {
    const auto q8 = group_closure(quaternion_generators());
    const std::vector<FreeGroupEndomorphism> gens{twist_alpha(), twist_beta()};
    std::set<std::string> seen;
    std::vector<std::size_t> sizes;
    for (const SL2Rep& rho : enumerate_hom_to_finite(q8, 1)) {
        if (seen.count(rho.key())) continue;
        const OrbitData o = orbit_closure({rho}, gens, 100);
        for (const SL2Rep& p : o.points) seen.insert(p.key());
        CHECK(o.cell == Cell::big);
        sizes.push_back(o.points.size());
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == q8_orbit_sizes());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 12, 12, 12, 24});

    const SL2Rep seed(1, {mat(0, 1, -1, 0), mat(0, 1, -1, 0)});
    const OrbitData o = orbit_closure({seed}, gens, 100);
    CHECK(o.points.size() == 12);
    CHECK(o.mu == SL2Mat::identity(4));
    CHECK(o.points.front() == seed);
    CHECK(rep_dimension(o, 3) == 12 * 27);
}

TEST_CASE("infinite orbits hit the cap") {
    const SL2Mat a = SL2Mat(c4(2), c4(0), c4(0), Cyclotomic(4, Rational(1, 2)));
    const SL2Rep seed(1, {a, SL2Mat::identity(4)});
    CHECK_THROWS_AS(orbit_closure({seed}, {twist_alpha(), twist_beta()}, 50), CapError);
    // Mixed moment maps are rejected.
    const SL2Rep other(1, {mat(0, 1, -1, 0), mat(1, 1, 0, 1)});
    CHECK_THROWS(orbit_closure({SL2Rep::trivial(1, 4), other}, {twist_alpha()}, 100));
}

TEST_CASE("representation dimensions") {
    CHECK(rep_dimension(Cell::big, 1, 1, 3) == 27);
    CHECK(rep_dimension(Cell::reduced, 1, 1, 3) == 9);
    CHECK(rep_dimension(Cell::reduced, 2, 4, 3) == 972);
    CHECK(rep_dimension(Cell::big, 2, 1, 5) == 15625);
    CHECK_THROWS(rep_dimension(Cell::big, 1, 1, 4));
    CHECK(rep_dimension(orbit_closure({SL2Rep::trivial(1, 4)}, {twist_alpha(), twist_beta()}, 10), 3) == 27);
}

TEST_CASE("reduced character space") {
    const SL2Rep red(1, {mat(0, 1, -1, 0), SL2Mat(c4(1), c4(0), kI, c4(1))});
    for (long n : {3L, 5L}) {
        const ReducedCharacterSpace s = reduced_character_space(red, n);
        CHECK(s.lifts.size() == static_cast<std::size_t>(n));
        std::set<std::string> distinct;
        for (const Cyclotomic& z : s.lifts) {
            CHECK(z.pow(n) == s.mu.c().embed(z.order()));
            distinct.insert(z.to_string());
        }
        CHECK(distinct.size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS(reduced_character_space(SL2Rep::trivial(1, 4), 3));
}

TEST_CASE("generator brackets") {
    const PoissonAlgebra d(BracketVariant::drinfeld), s(BracketVariant::sts);
    const Poly4 a = Poly4::var(0), b = Poly4::var(1), c = Poly4::var(2), dd = Poly4::var(3);
    CHECK(d.generator_bracket(0, 1) == -(a * b));
    CHECK(d.generator_bracket(0, 2) == -(a * c));
    CHECK(d.generator_bracket(1, 2).is_zero());
    CHECK(d.generator_bracket(0, 3) == Poly4(-2) * b * c);
    CHECK(s.generator_bracket(3, 0).is_zero());
    CHECK(s.generator_bracket(2, 3) == Poly4(2) * a * c);
    CHECK(s.generator_bracket(2, 1) == Poly4(2) * a * (a - dd));
}

TEST_CASE("Poisson algebra properties") {
    std::mt19937 rng(21);
    const Poly4 det = Poly4::var(0) * Poly4::var(3) - Poly4::var(1) * Poly4::var(2);
    const Poly4 trace = Poly4::var(0) + Poly4::var(3);
    for (auto v : {BracketVariant::drinfeld, BracketVariant::sts}) {
        const PoissonAlgebra p(v);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                for (int z = 0; z < 4; ++z) CHECK(p.jacobiator(x, y, z).is_zero());
        for (int i = 0; i < 4; ++i) CHECK(p.bracket(Poly4::var(i), det).is_zero());
        for (int trial = 0; trial < 10; ++trial) {
            const Poly4 f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
            CHECK(p.bracket(f, g) == -p.bracket(g, f));
            CHECK(p.bracket(f, g * h) == p.bracket(f, g) * h + g * p.bracket(f, h));
            CHECK(p.bracket(f, g, true) == reduce_det(p.bracket(f, g)));
        }
    }
    // The trace is a Casimir only for the conjugation-type bracket.
    CHECK(PoissonAlgebra(BracketVariant::sts).bracket(Poly4::var(1), trace).is_zero());
    CHECK_FALSE(PoissonAlgebra(BracketVariant::drinfeld).bracket(Poly4::var(1), trace).is_zero());
}

TEST_CASE("determinant reduction") {
    const Poly4 a = Poly4::var(0), d = Poly4::var(3), b = Poly4::var(1), c = Poly4::var(2);
    CHECK(reduce_det(a * d) == Poly4(1) + b * c);
    CHECK(reduce_det(a * a * d * d) == reduce_det((Poly4(1) + b * c) * (Poly4(1) + b * c)));
    CHECK(reduce_det(a * b) == a * b);
}

TEST_CASE("quantum R-matrix expansion") {
    const RMatrixReport r = verify_r_matrix_expansion();
    CHECK(r.r_tau_plus);
    CHECK(r.r_minus_tau);
    CHECK(r.rinv_plus_tau);
    CHECK(r.rinv_tau_minus);
    CHECK(r.tau_involution);
    CHECK(r.ok());
    CHECK_FALSE(r.literal_convention_holds);
    CHECK(r.literal_scale == 2);

    const DualMat4 tau = swap_tau();
    CHECK(tau * tau == dual_identity());
    const DualMat4 rp = classical_r_plus(), rm = classical_r_minus();
    // r- is the flip of r+.
    CHECK(tau * rp * tau == rm);
    const DualMat4 big_r = quantum_r_matrix(DualNumber(1, Rational(1, 2)));
    CHECK(big_r * inverse(big_r) == dual_identity());
    CHECK(quantum_r_matrix(DualNumber(1)) == tau);
}
