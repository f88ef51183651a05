#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/detect.hpp"
#include "skeinlab/json_io.hpp"

#include <omp.h>

#include <algorithm>

using namespace skeinlab;

namespace {

DetectionRequest with_beta(NormalCurve a, NormalCurve b, long n) {
    DetectionRequest r(std::move(a));
    r.n = n;
    r.beta = std::move(b);
    return r;
}

DetectionRequest with_phi(NormalCurve a, SL2Z m, long n) {
    DetectionRequest r(std::move(a));
    r.n = n;
    r.phi = MappingClass(m);
    return r;
}

// Oracle: total fiber over support entries that reduce to the given coset.
std::uint64_t fiber_over(const TraceSupport& s, const CosetReducer& r, const std::vector<long>& coset) {
    std::uint64_t total = 0;
    for (const auto& e : s.entries)
        if (r.reduce(e.k) == coset) total += e.fiber;
    return total;
}

}  // namespace

TEST_CASE("a Dehn twist of the meridian is certified") {
    const Certificate c = run_detection(with_phi(torus_curve(0, 1), {1, 1, 0, 1}, 5));
    CHECK(c.verdict == Verdict::certified_nontrivial);
    CHECK(c.method == "edge-bound");
    CHECK(c.reasons.empty());
    CHECK(c.alpha == std::vector<int>{0, 1, 1, 0, 0});
    CHECK(c.beta == std::vector<int>{1, 1, 2, 1, 0});
    CHECK(c.assumptions == std::vector<std::string>{"delta-liftable"});
    REQUIRE(c.witness.has_value());
    REQUIRE(c.verification.has_value());
    CHECK(c.verification->ok);
    CHECK(c.verification->method == "bruteforce");

    // Re-derive the witness fibers from scratch.
    const BalancedLattice lat(sigma_g_star(1));
    const CosetReducer r(central_sublattice(lat, 5).definitional * lat.basis());
    const Witness& w = *c.witness;
    CHECK(r.reduce(w.k) == w.coset);
    const std::uint64_t fa = fiber_over(enumerate_admissible_states(torus_curve(0, 1)), r, w.coset);
    const std::uint64_t fb = fiber_over(enumerate_admissible_states(torus_curve(1, 1)), r, w.coset);
    CHECK(fa == w.fiber_alpha);
    CHECK(fb == w.fiber_beta);
    CHECK(std::min(fa, fb) == 0);
    CHECK(std::max(fa, fb) == 1);
}

TEST_CASE("identical curves are reported as isotopic") {
    const Certificate c = run_detection(with_phi(torus_curve(2, 1), {1, 0, 0, 1}, 5));
    CHECK(c.verdict == Verdict::inconclusive);
    CHECK(c.reasons == std::vector<std::string>{"isotopic-curves"});
    CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("bound failures fall through to the support search") {
    const DetectionRequest req = with_beta(torus_curve(4, 1), torus_curve(1, 0), 3);
    const Certificate eb = detect_edge_bound(req);
    CHECK(eb.verdict == Verdict::inconclusive);
    CHECK(std::find(eb.reasons.begin(), eb.reasons.end(), "bound-exceeded") != eb.reasons.end());
    const Certificate c = run_detection(req);
    CHECK(c.method == "support");
    CHECK(c.verdict == Verdict::certified_nontrivial);
    CHECK(c.reasons == std::vector<std::string>{"bound-exceeded"});
    REQUIRE(c.verification.has_value());
    CHECK(c.verification->ok);
}

TEST_CASE("ambiguous fibers stay inconclusive") {
    const Certificate c = run_detection(with_beta(torus_curve(3, 1), torus_curve(3, -1), 3));
    CHECK(c.verdict == Verdict::inconclusive);
    CHECK(c.reasons == std::vector<std::string>{"bound-exceeded", "fibers-ambiguous"});
    CHECK_FALSE(c.witness.has_value());
    CHECK_FALSE(c.verification.has_value());
    CHECK(c.cosets_alpha > 0);
    CHECK(c.cosets_beta > 0);
}

TEST_CASE("big cell uses the refined lattice") {
    DetectionRequest req = with_beta(torus_curve(0, 1), torus_curve(1, 0), 3);
    req.cell = Cell::big;
    const Certificate c = run_detection(req);
    CHECK(c.method == "refined-support");
    CHECK(c.cell == Cell::big);
    CHECK(c.verdict == Verdict::certified_nontrivial);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->k.size() == 6);
    CHECK(c.witness->k.back() == 0);
}

TEST_CASE("bound certificates agree with the support search") {
    const long pq[][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
    for (const auto& x : pq)
        for (const auto& y : pq) {
            if (x == y) continue;
            for (long n : {5L, 7L}) {
                const DetectionRequest req = with_beta(torus_curve(x[0], x[1]), torus_curve(y[0], y[1]), n);
                const Certificate eb = detect_edge_bound(req);
                const Certificate sup = detect_support(req);
                if (eb.verdict == Verdict::certified_nontrivial) CHECK(sup.verdict == Verdict::certified_nontrivial);
                // Every pair here meets each edge at most 3 times, so both N are in range.
                CHECK(eb.verdict == Verdict::certified_nontrivial);
            }
        }
}

TEST_CASE("raising N keeps certificates") {
    for (const auto& m : {SL2Z{1, 1, 0, 1}, SL2Z{1, 0, 1, 1}, SL2Z{0, -1, 1, 0}}) {
        const Certificate c5 = run_detection(with_phi(torus_curve(1, 0), m, 5));
        const Certificate c7 = run_detection(with_phi(torus_curve(1, 0), m, 7));
        if (c5.verdict == Verdict::certified_nontrivial) CHECK(c7.verdict == Verdict::certified_nontrivial);
    }
}

TEST_CASE("certificates are deterministic across thread counts") {
    const DetectionRequest req = with_beta(torus_curve(4, 1), torus_curve(1, 0), 3);
    const std::string first = certificate_json(run_detection(req)).dump();
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string serial = certificate_json(run_detection(req)).dump();
    omp_set_num_threads(saved);
    CHECK(first == serial);
    CHECK(first == certificate_json(run_detection(req)).dump());
}

TEST_CASE("request validation") {
    CHECK_THROWS(resolve_beta(with_phi(torus_curve(0, 1), {1, 1, 0, 1}, 4)));
    CHECK_THROWS(resolve_beta(with_phi(torus_curve(0, 1), {1, 1, 0, 1}, 1)));
    // Neither phi nor beta.
    CHECK_THROWS(resolve_beta(DetectionRequest(torus_curve(0, 1))));
    // Genus mismatch.
    DetectionRequest g2 = with_beta(torus_curve(0, 1), torus_curve(1, 0), 5);
    g2.genus = 2;
    CHECK_THROWS(resolve_beta(g2));
    // Disconnected alpha: two parallel meridians.
    CHECK_THROWS(resolve_beta(with_beta(NormalCurve(sigma_g_star(1), {0, 2, 2, 0, 0}), torus_curve(1, 0), 5)));
    CHECK(resolve_beta(with_phi(torus_curve(0, 1), {1, 1, 0, 1}, 5)) == torus_curve(1, 1));
}

TEST_CASE("verdict labels") {
    CHECK(to_string(Verdict::certified_nontrivial) == "certified-nontrivial");
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");
    CHECK(to_string(Cell::big) == "big");
    CHECK(to_string(Cell::reduced) == "reduced");
}
