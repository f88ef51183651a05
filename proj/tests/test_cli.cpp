#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/config.hpp"
#include "skeinlab/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

using namespace skeinlab;

TEST_CASE("rational and cyclotomic round trips") {
    CHECK(rational_json(Rational(3)) == json(3));
    CHECK(rational_json(Rational(-3, 4)) == json("-3/4"));
    CHECK(parse_rational_json(json("-3/4")) == Rational(-3, 4));
    CHECK(parse_rational_json(json(7)) == Rational(7));
    CHECK_THROWS(parse_rational_json(json(true)));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int m : {3, 4, 5, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> c(CyclotomicField::get(m).degree());
            for (auto& q : c) {
                q = Rational(num(rng), den(rng));
                q.canonicalize();
            }
            const Cyclotomic x(m, c);
            CHECK(parse_cyclotomic(cyclotomic_json(x), 4) == x);
            CHECK(parse_cyclotomic(json::parse(cyclotomic_json(x).dump()), 4) == x);
        }
    }
    CHECK(parse_cyclotomic(json("1/2"), 5) == Cyclotomic(5, Rational(1, 2)));
}

TEST_CASE("SL2 and representation round trips") {
    const Cyclotomic i = Cyclotomic::zeta(4, 1), zero(4);
    const SL2Mat m(i, zero, zero, -i);
    CHECK(parse_sl2(sl2_json(m), 4) == m);
    CHECK(parse_sl2(json::parse("[0, 1, -1, 0]"), 4) == SL2Mat(zero, Cyclotomic::one(4), -Cyclotomic::one(4), zero));
    CHECK_THROWS(parse_sl2(json::parse("[[1, 1], [1, 1]]"), 4));

    const SL2Rep rho(1, {m, SL2Mat(Cyclotomic::one(4), Cyclotomic::one(4), zero, Cyclotomic::one(4))});
    const json j = rep_json(rho);
    CHECK(j["genus"] == 1);
    CHECK(j["field"]["cyclotomicOrder"] == 4);
    CHECK(parse_rep(j) == rho);
    json bad = j;
    bad["images"].erase(1);
    CHECK_THROWS(parse_rep(bad));
}

TEST_CASE("mapping class parsing") {
    const MappingClass ta = parse_mapping_class(json("T_alpha"), 1);
    CHECK(ta.homology_action() == SL2Z{1, 1, 0, 1});
    CHECK(parse_mapping_class(json::parse(R"({"matrix": [[0, -1], [1, 0]]})"), 1).matrix() == SL2Z{0, -1, 1, 0});
    CHECK_THROWS(parse_mapping_class(json::parse(R"({"matrix": [[2, 0], [0, 1]]})"), 1));
    const FreeGroupEndomorphism tb = parse_automorphism(json::parse(R"({"words": {"a1": "a B"}})"), 1);
    CHECK(tb.images() == twist_beta().images());
    CHECK_THROWS(parse_automorphism(json::parse(R"({"words": {"a1": "b"}})"), 1));
    const json out = mapping_class_json(MappingClass(twist_alpha()));
    CHECK(parse_mapping_class(out, 1).words().images() == twist_alpha().images());
}

TEST_CASE("curve parsing") {
    CHECK(parse_curve(json::parse(R"({"pq": [1, 1]})"), 1) == torus_curve(1, 1));
    CHECK(parse_curve(json::parse(R"({"coords": [0, 1, 1, 0, 0]})"), 1) == torus_curve(0, 1));
    const json c = curve_json(torus_curve(2, 1));
    CHECK(parse_curve(c, 1) == torus_curve(2, 1));
    CHECK_THROWS(parse_curve(json::parse(R"({"coords": [1, 0, 0, 0, 0]})"), 1));
    CHECK_THROWS(parse_curve(json::parse(R"({"pq": [2, 2]})"), 1));
}

TEST_CASE("report shapes") {
    const json t = triangulation_json(*sigma_g_star(1));
    CHECK(t["genus"] == 1);
    CHECK(t["faces"].size() == 3);
    CHECK(t["edges"].size() == 5);
    CHECK(t["check"]["euler"] == -1);

    const json s = support_json(enumerate_admissible_states(torus_curve(0, 1)));
    CHECK(s["points"] == 2);
    CHECK(s["admissibleStates"] == 3);
    CHECK(s["support"].size() == 3);

    DetectionRequest req(torus_curve(0, 1));
    req.phi = MappingClass(SL2Z{1, 1, 0, 1});
    const json cert = certificate_json(run_detection(req));
    for (const char* key : {"verdict", "method", "N", "genus", "cell", "alpha", "beta", "reasons", "assumptions",
                            "cosets", "witness", "verification"})
        CHECK(cert.contains(key));
    CHECK(cert["verdict"] == "certified-nontrivial");
    CHECK(cert["N"] == 5);

    const json leaf = leaf_json(classify_sts_leaf(SL2Mat::identity(4)));
    CHECK(leaf.contains("cell"));
}

TEST_CASE("session configuration") {
    SessionConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.merge(json::parse(R"({"N": 7, "genus": 2, "stateCap": 30, "threads": 1})"));
    CHECK(cfg.n == 7);
    CHECK(cfg.genus == 2);
    CHECK(cfg.state_cap == 30);
    CHECK(cfg.threads == 1);
    CHECK_THROWS(cfg.merge(json::parse(R"({"colour": "red"})")));

    SessionConfig even;
    even.n = 4;
    CHECK_THROWS(even.validate());
    SessionConfig zero_cap;
    zero_cap.state_cap = 0;
    CHECK_THROWS(zero_cap.validate());

    const std::string path = "test_cli_config.json";
    {
        std::ofstream out(path);
        out << R"({"N": 9, "cyclotomicOrder": 8})";
    }
    SessionConfig from_file;
    from_file.merge_file(path);
    CHECK(from_file.n == 9);
    CHECK(from_file.cyclotomic_order == 8);
    std::remove(path.c_str());
    CHECK_THROWS(from_file.merge_file("does_not_exist.json"));

    setenv("SKEINLAB_THREADS", "3", 1);
    SessionConfig env;
    env.merge_environment();
    CHECK(env.threads == 3);
    setenv("SKEINLAB_THREADS", "many", 1);
    CHECK_THROWS(env.merge_environment());
    unsetenv("SKEINLAB_THREADS");
}
