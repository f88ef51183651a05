#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/balanced_lattice.hpp"

using namespace skeinlab;

namespace {

Integer ipow(long b, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
    return out;
}

bool balanced_by_faces(const Triangulation& t, const std::vector<Integer>& v) {
    for (const auto& f : t.faces())
        if ((v[f[0]] + v[f[1]] + v[f[2]]) % 2 != 0) return false;
    return true;
}

// Calls fn on every vector in [-r, r]^n.
template <class Fn>
void for_box(std::size_t n, long r, Fn fn) {
    std::vector<long> v(n, -r);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < n && v[i] == r) v[i++] = -r;
        if (i == n) return;
        ++v[i];
    }
}

}  // namespace

TEST_CASE("built-in triangulations have the expected cell counts") {
    for (int g = 1; g <= 4; ++g) {
        const TriangulationPtr t = sigma_g_star(g);
        CHECK(t->num_faces() == static_cast<std::size_t>(4 * g - 1));
        CHECK(t->num_edges() == static_cast<std::size_t>(6 * g - 1));
        CHECK(t->num_boundary_edges() == 1);
        CHECK(t->num_vertices() == 1);
        CHECK(t->euler_characteristic() == 1 - 2 * g);
        CHECK(t->h1_rank() == static_cast<std::size_t>(2 * g));
        CHECK(t->validation_error(true).empty());
        CHECK(t->genus() == g);
    }
    CHECK(sigma_g_star(2) == sigma_g_star(2));  // cached
}

TEST_CASE("validation catches malformed face lists") {
    auto invalid = [](std::vector<std::array<int, 3>> faces) {
        try {
            return !Triangulation("bad", std::move(faces), 0).validation_error(false).empty();
        } catch (const std::exception&) {
            return true;
        }
    };
    CHECK(invalid({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));  // edge 0 on three slots
    CHECK(invalid({{0, 1, 3}}));                        // edge 2 unused
    CHECK_FALSE(invalid({{0, 1, 2}}));
}

TEST_CASE("chain complex squares to zero") {
    for (int g = 1; g <= 3; ++g) {
        const TriangulationPtr t = sigma_g_star(g);
        CHECK((t->boundary2() * t->boundary1()).is_zero());
    }
}

TEST_CASE("Delta_1 Weil-Petersson form and balanced lattice fixtures") {
    const TriangulationPtr t = sigma_g_star(1);
    CHECK(wp_form(*t) == IntMatrix{{0, 1, -1, 1, -1}, {-1, 0, 2, -1, 0}, {1, -2, 0, 1, 0}, {-1, 1, -1, 0, 1}, {1, 0, 0, -1, 0}});
    const BalancedLattice lat(t);
    CHECK(lat.basis() == IntMatrix{{1, 0, 1, 1, 0}, {0, 1, 1, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}});
    CHECK(lat.form() == IntMatrix{{0, -2, -4, 4, 0}, {2, 0, 4, 0, 0}, {4, -4, 0, 4, 0}, {-4, 0, -4, 0, 4}, {0, 0, 0, -4, 0}});
}

TEST_CASE("balanced lattice membership agrees with the face parity oracle") {
    for (int g = 1; g <= 2; ++g) {
        const TriangulationPtr t = sigma_g_star(g);
        const BalancedLattice lat(t);
        CHECK(lat.rank() == t->num_edges());
        CHECK(lat.form().is_skew_symmetric());
        const long r = g == 1 ? 2 : 1;
        std::size_t mismatches = 0;
        for_box(t->num_edges(), r, [&](const std::vector<long>& v) {
            const auto iv = to_integer_vector(v);
            if (balanced_by_faces(*t, iv) != lat.coordinates(iv).has_value()) ++mismatches;
            if (balanced_by_faces(*t, iv) != lat.is_balanced(v)) ++mismatches;
        });
        CHECK(mismatches == 0);
    }
}

TEST_CASE("boundary vector is central for the Weil-Petersson form") {
    for (int g = 1; g <= 3; ++g) {
        const BalancedLattice lat(sigma_g_star(g));
        const auto kb = lat.boundary_vector();
        CHECK(lat.is_balanced(to_long_vector(kb)));
        for (std::size_t i = 0; i < lat.rank(); ++i) CHECK(bilinear(lat.ambient_form(), kb, lat.basis().row(i)) == 0);
    }
}

TEST_CASE("central sublattice: definitional kernel against brute force") {
    const BalancedLattice lat(sigma_g_star(1));
    for (long n : {3L, 5L}) {
        const CentralSublattice c0 = central_sublattice(lat, n);
        std::size_t mismatches = 0;
        for_box(lat.rank(), n == 3 ? 3 : 2, [&](const std::vector<long>& c) {
            const auto ic = to_integer_vector(c);
            bool central = true;
            for (std::size_t j = 0; j < lat.rank() && central; ++j) {
                std::vector<Integer> e(lat.rank(), 0);
                e[j] = 1;
                central = bilinear(lat.form(), ic, e) % n == 0;
            }
            if (central != coordinates_in(c0.definitional, ic).has_value()) ++mismatches;
        });
        CHECK(mismatches == 0);
        // Index as a product of HNF pivots.
        Integer pivots = 1;
        for (std::size_t i = 0; i < c0.definitional.rows(); ++i) pivots *= c0.definitional(i, i);
        CHECK(pivots == c0.index);
    }
}

TEST_CASE("index, formula lattice and PI-degree over the grid") {
    for (int g = 1; g <= 3; ++g) {
        const BalancedLattice lat(sigma_g_star(g));
        for (long n : {3L, 5L, 7L}) {
            const CentralSublattice c0 = central_sublattice(lat, n);
            CHECK(c0.index == ipow(n, 2 * (3 * g - 1)));
            CHECK(c0.equal);
            CHECK(c0.definitional == c0.formula);
            const PiDegreeReport p = pi_degree(lat, n);
            CHECK(p.perfect_square);
            CHECK(p.pi_degree == ipow(n, 3 * g - 1));
        }
    }
}

TEST_CASE("PI-degree of small skew lattices") {
    const SkewLattice odd("odd", {"x", "y", "z"}, IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    const PiDegreeReport p = pi_degree(odd, 3);
    CHECK(p.index == 9);
    CHECK(p.pi_degree == 3);
    const SkewLattice twisted("tw", {"x", "y"}, IntMatrix{{0, 3}, {-3, 0}});
    CHECK(pi_degree(twisted, 9).index == 9);
    CHECK(pi_degree(twisted, 3).index == 1);
}

TEST_CASE("refined lattice of Delta_1") {
    const RefinedLattice ref(sigma_g_star(1));
    CHECK(ref.rank() == 6);
    CHECK(ref.extended()->validation_error(false).empty());
    CHECK(ref.extended()->num_faces() == 4);
    CHECK(ref.form() == IntMatrix{{0, -2, -4, 4, 0, 0},
                                  {2, 0, 4, 0, 0, 0},
                                  {4, -4, 0, 4, 0, 0},
                                  {-4, 0, -4, 0, 4, 4},
                                  {0, 0, 0, -4, 0, 4},
                                  {0, 0, 0, -4, -4, 0}});
    // The k-hat generator embeds with weight 2 on a_boundary and 0 elsewhere on the old edges.
    const auto last = ref.basis().row(ref.rank() - 1);
    CHECK(last == std::vector<Integer>{0, 0, 0, 0, 0, 2});
}

TEST_CASE("refined comparison report") {
    for (int g = 1; g <= 2; ++g) {
        const RefinedLattice ref(sigma_g_star(g));
        for (long n : {3L, 5L}) {
            if (g == 2 && n == 5) continue;
            const RefinedComparison cmp = compare_refined(ref, n);
            CHECK(cmp.expected_index == ipow(n, 6 * g));
            CHECK(cmp.index_matches_expected);
            CHECK(cmp.degree.perfect_square);
            CHECK(cmp.degree.pi_degree == ipow(n, 3 * g));
            // The definitional kernel is not the displayed direct sum.
            CHECK_FALSE(cmp.kernels_equal);
        }
    }
    const RefinedComparison c1 = compare_refined(RefinedLattice(sigma_g_star(1)), 3);
    CHECK(c1.pairing_checks == 36);
    CHECK(c1.pairing_mismatches == 4);
    const RefinedComparison c2 = compare_refined(RefinedLattice(sigma_g_star(2)), 3);
    CHECK(c2.pairing_checks == 144);
    CHECK(c2.pairing_mismatches == 6);
}
