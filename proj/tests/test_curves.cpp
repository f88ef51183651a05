#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/mapping_class.hpp"
#include "skeinlab/states.hpp"

#include <map>
#include <random>

using namespace skeinlab;

namespace {

// Oracle: recursive sign assignment over the traced points, pruning on each
// corner piece once both endpoints are set.
std::map<std::vector<long>, std::uint64_t> oracle_support(const NormalCurve& c) {
    const CurveGraph g = trace_curve(c);
    std::vector<int> sign(g.points.size(), 0);
    std::map<std::vector<long>, std::uint64_t> out;
    auto consistent = [&]() {
        for (const auto& arc : g.arcs) {
            const int a = sign[arc.a_point], b = sign[arc.b_point];
            if (a == 1 && b == -1) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (!consistent()) return;
        if (i == sign.size()) {
            std::vector<long> k(c.coords().size(), 0);
            for (std::size_t p = 0; p < sign.size(); ++p) k[g.points[p].edge] += sign[p];
            ++out[k];
            return;
        }
        for (int s : {1, -1}) {
            sign[i] = s;
            self(self, i + 1);
        }
        sign[i] = 0;
    };
    rec(rec, 0);
    return out;
}

SL2Z random_sl2z(std::mt19937& rng, int length) {
    const SL2Z gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, -1, 1, 0}};
    SL2Z m;
    for (int i = 0; i < length; ++i) m = m * gens[rng() % 5];
    return m;
}

std::array<long, 2> canonical(std::array<long, 2> h) {
    if (h[0] < 0 || (h[0] == 0 && h[1] < 0)) return {-h[0], -h[1]};
    return h;
}

}  // namespace

TEST_CASE("torus curve fixtures") {
    const std::map<std::pair<long, long>, std::vector<int>> fixtures = {
        {{0, 1}, {0, 1, 1, 0, 0}}, {{1, 0}, {1, 0, 1, 1, 0}}, {{1, 1}, {1, 1, 2, 1, 0}},
        {{2, 1}, {2, 1, 3, 2, 0}}, {{1, 2}, {1, 2, 3, 1, 0}}, {{1, -1}, {1, 1, 0, 1, 0}},
        {{4, 1}, {4, 1, 5, 4, 0}},
    };
    for (const auto& [pq, coords] : fixtures) {
        CAPTURE(pq.first);
        CAPTURE(pq.second);
        const NormalCurve c = torus_curve(pq.first, pq.second);
        CHECK(c.coords() == coords);
        CHECK(canonical(torus_homology(c)) == canonical({pq.first, pq.second}));
        CHECK(trace_curve(c).components.size() == 1);
        if (c.total() <= 10) CHECK(torus_curve_by_search(pq.first, pq.second, 12) == c);
    }
    CHECK_THROWS(torus_curve(2, 2));
}

TEST_CASE("normal coordinate validation") {
    const TriangulationPtr t = sigma_g_star(1);
    CHECK(normal_coordinates_error(*t, {0, 1, 1, 0, 0}).empty());
    CHECK_FALSE(normal_coordinates_error(*t, {0, 1, 0, 0, 0}).empty());  // odd face sum
    CHECK_FALSE(normal_coordinates_error(*t, {0, 3, 1, 0, 0}).empty());  // triangle inequality
    CHECK_THROWS(NormalCurve(t, {1, 0, 0, 0, 0}));
    CHECK(enumerate_normal_curves(t, 6, true).size() == 6);
    CHECK(enumerate_normal_curves(t, 6, false).size() == 10);
}

TEST_CASE("support sizes and state counts") {
    const struct {
        long p, q;
        std::size_t support;
        std::uint64_t states;
    } table[] = {{0, 1, 3, 3}, {1, 0, 4, 4}, {1, 1, 7, 8}, {2, 1, 17, 29}, {1, 2, 13, 20}, {4, 1, 63, 403}};
    for (const auto& row : table) {
        const TraceSupport s = enumerate_admissible_states(torus_curve(row.p, row.q));
        CHECK(s.entries.size() == row.support);
        CHECK(s.admissible_states == row.states);
    }
    const TraceSupport s01 = enumerate_admissible_states(torus_curve(0, 1));
    CHECK(s01.points == 2);
    REQUIRE(s01.entries.size() == 3);
    CHECK(s01.entries[0].k == std::vector<long>{0, -1, -1, 0, 0});
    CHECK(s01.entries[1].k == std::vector<long>{0, -1, 1, 0, 0});
    CHECK(s01.entries[2].k == std::vector<long>{0, 1, 1, 0, 0});
}

TEST_CASE("a lone triangle with one corner arc") {
    auto t = std::make_shared<const Triangulation>("tri", std::vector<std::array<int, 3>>{{0, 1, 2}}, 0);
    const NormalCurve arc(t, {1, 1, 0});
    const TraceSupport s = enumerate_states_bruteforce_serial(arc);
    CHECK(s.admissible_states == 3);
    const SupportEntry* plus = s.find({1, 1, 0});
    REQUIRE(plus != nullptr);
    CHECK(plus->fiber == 1);
    CHECK(s.find({1, -1, 0}) == nullptr);
    CHECK(corner_piece_admissible(1, 1));
    CHECK(corner_piece_admissible(-1, 1));
    CHECK_FALSE(corner_piece_admissible(1, -1));
}

TEST_CASE("support bounds, including corrupted data and the empty curve") {
    const NormalCurve c = torus_curve(2, 1);
    TraceSupport s = enumerate_admissible_states(c);
    CHECK(support_bounds_check(s, c));
    s.entries.front().k.back() = 2;  // boundary arc must carry k = 0
    CHECK_FALSE(support_bounds_check(s, c));

    const NormalCurve empty = NormalCurve::empty(sigma_g_star(1));
    const TraceSupport e = enumerate_admissible_states(empty);
    REQUIRE(e.entries.size() == 1);
    CHECK(e.entries[0].k == std::vector<long>(5, 0));
    CHECK(e.entries[0].fiber == 1);
}

TEST_CASE("transfer enumeration agrees with brute force and the recursive oracle") {
    for (int g = 1; g <= 2; ++g) {
        const auto curves = enumerate_normal_curves(sigma_g_star(g), g == 1 ? 10 : 6, false);
        REQUIRE(!curves.empty());
        for (const NormalCurve& c : curves) {
            const TraceSupport dp = enumerate_admissible_states(c);
            const TraceSupport serial = enumerate_states_bruteforce_serial(c);
            CHECK(dp == serial);
            CHECK(enumerate_states_bruteforce_omp(c) == serial);
            std::map<std::vector<long>, std::uint64_t> got;
            for (const auto& e : dp.entries) got[e.k] = e.fiber;
            CHECK(got == oracle_support(c));
            CHECK(support_bounds_check(dp, c));
        }
    }
}

TEST_CASE("enumeration cap") {
    EnumerationOptions opt;
    opt.cap = 10;
    CHECK_THROWS_AS(enumerate_admissible_states(torus_curve(4, 1), opt), CapExceeded);
    CHECK_THROWS_AS(enumerate_states_bruteforce_serial(torus_curve(4, 1), opt), CapExceeded);
    try {
        enumerate_admissible_states(torus_curve(4, 1), opt);
    } catch (const CapExceeded& e) {
        CHECK(e.points == 14);
        CHECK(e.cap == 10);
    }
}

TEST_CASE("injectivity modulo K0 holds when coordinates stay below N") {
    const BalancedLattice lat(sigma_g_star(1));
    const long pq[][2] = {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {4, 1}};
    for (long n : {3L, 5L, 7L}) {
        const CosetReducer reducer(central_sublattice(lat, n).definitional * lat.basis());
        for (const auto& x : pq) {
            const NormalCurve c = torus_curve(x[0], x[1]);
            const bool injective = support_injective_mod(enumerate_admissible_states(c), reducer);
            if (c.max_coordinate() <= n - 1) CHECK(injective);
        }
    }
    // (4,1) has a coordinate 5 > N - 1 at N = 3 and collides.
    const CosetReducer r3(central_sublattice(lat, 3).definitional * lat.basis());
    CHECK_FALSE(support_injective_mod(enumerate_admissible_states(torus_curve(4, 1)), r3));
}

TEST_CASE("free group words") {
    CHECK(parse_word("a b A B", 1) == FreeWord{1, 2, -1, -2});
    CHECK(parse_word("a1b1A1B1a2", 2) == FreeWord{1, 2, -1, -2, 3});
    CHECK(format_word(parse_word("aB", 1)) == "a1B1");
    CHECK(parse_word(format_word({3, -4, 1}), 2) == FreeWord{3, -4, 1});
    CHECK_THROWS(parse_word("a2", 1));
    CHECK_THROWS(parse_word("x", 1));
    CHECK(reduce_word({1, 2, -2, -1, 3}) == FreeWord{3});
    CHECK(concat({1, 2}, inverse_word({1, 2})).empty());
    CHECK(boundary_word(2) == FreeWord{1, 2, -1, -2, 3, 4, -3, -4});
}

TEST_CASE("automorphism validation") {
    CHECK(validate_automorphism(twist_alpha()));
    CHECK(validate_automorphism(twist_beta()));
    CHECK(validate_automorphism(twist_alpha().compose(twist_beta())));
    // Swapping generators fixes nothing.
    CHECK_FALSE(validate_automorphism(FreeGroupEndomorphism(1, {{2}, {1}})));
    // a -> a^2 is not invertible on homology.
    CHECK_FALSE(validate_automorphism(FreeGroupEndomorphism(1, {{1, 1}, {2}})));
    CHECK_THROWS(MappingClass(FreeGroupEndomorphism(1, {{2}, {1}})));
    CHECK_THROWS(MappingClass(SL2Z{2, 0, 0, 1}));
    CHECK(twist_alpha().apply({1, 2}) == FreeWord{1, 2, 1});
    CHECK(twist_alpha().abelianization() == IntMatrix{{1, 1}, {0, 1}});
}

TEST_CASE("mapping class action on torus curves") {
    const NormalCurve a = torus_curve(0, 1), b = torus_curve(1, 0);
    CHECK(act_on_curve(MappingClass(SL2Z{1, 1, 0, 1}), a) == torus_curve(1, 1));
    CHECK(act_on_curve(MappingClass(SL2Z{0, -1, 1, 0}), b) == a);
    CHECK(act_on_curve(MappingClass(SL2Z{}), torus_curve(2, 1)) == torus_curve(2, 1));
    CHECK(act_on_curve(MappingClass(twist_alpha()), a) == torus_curve(1, 1));

    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const SL2Z m1 = random_sl2z(rng, 1 + static_cast<int>(rng() % 5));
        const SL2Z m2 = random_sl2z(rng, 1 + static_cast<int>(rng() % 5));
        const NormalCurve c = torus_curve(0, 1);
        // Keep the curves small enough to trace.
        const SL2Z prod = m1 * m2;
        if (std::abs(prod.b) + std::abs(prod.d) > 6 || std::abs(m2.b) + std::abs(m2.d) > 6) continue;
        CHECK(act_on_curve(MappingClass(m1), act_on_curve(MappingClass(m2), c)) == act_on_curve(MappingClass(prod), c));
    }
}
