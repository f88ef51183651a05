// skeinlab command-line front end. Every subcommand writes one JSON document to
// stdout; diagnostics go to stderr.

#include "skeinlab/acceptance.hpp"
#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/config.hpp"
#include "skeinlab/detect.hpp"
#include "skeinlab/json_io.hpp"
#include "skeinlab/qtorus.hpp"
#include "skeinlab/states.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <set>

using namespace skeinlab;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

// Accepts bare rationals such as 1/2 inside matrix literals.
json parse_matrix_text(const std::string& text) {
    static const std::regex bare(R"((-?\d+/\d+))");
    return json::parse(std::regex_replace(text, bare, "\"$1\""));
}

std::vector<long> parse_list(const std::string& text) {
    std::vector<long> out;
    std::string item;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (item.find_first_not_of(" ") == std::string::npos) throw std::invalid_argument("empty list entry");
            out.push_back(std::stol(item));
            item.clear();
        } else if (ch != '(' && ch != ')' && ch != '[' && ch != ']') {
            item += ch;
        }
    }
    return out;
}

NormalCurve curve_from_options(const std::string& pq, const std::string& coords, const std::string& file, int genus) {
    if (!file.empty()) return parse_curve(read_json_file(file), genus);
    if (!coords.empty()) {
        json c = json::array();
        for (long x : parse_list(coords)) c.push_back(x);
        return parse_curve({{"coords", c}}, genus);
    }
    if (!pq.empty()) {
        const std::vector<long> v = parse_list(pq);
        if (v.size() != 2) throw std::invalid_argument("--curve expects \"p,q\"");
        return parse_curve({{"pq", v}}, genus);
    }
    throw std::invalid_argument("a curve is required (--curve, --coords or --curve-file)");
}

Integer ipow(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

json surface_info(int genus) {
    const TriangulationPtr t = sigma_g_star(genus);
    return {{"genus", genus},
            {"faces", t->num_faces()},
            {"edges", t->num_edges()},
            {"innerEdges", t->num_inner_edges()},
            {"boundaryEdges", t->num_boundary_edges()},
            {"vertices", t->num_vertices()},
            {"euler", t->euler_characteristic()},
            {"h1rank", t->h1_rank()},
            {"valid", t->validation_error(true).empty()},
            {"triangulation", triangulation_json(*t)},
            {"weilPetersson", int_matrix_json(wp_form(*t))}};
}

json lattice_info(int genus, long n, bool refined) {
    const BalancedLattice lat(sigma_g_star(genus));
    const PiDegreeReport deg = pi_degree(lat, n);
    const CentralSublattice c0 = central_sublattice(lat, n);
    const std::vector<Integer> kb = lat.boundary_vector();
    bool central = true;
    for (std::size_t i = 0; i < lat.rank(); ++i) central = central && bilinear(lat.ambient_form(), kb, lat.basis().row(i)) == 0;
    json out = {{"genus", genus},
                {"N", n},
                {"rank", lat.rank()},
                {"basis", int_matrix_json(lat.basis())},
                {"form", int_matrix_json(lat.form())},
                {"index", deg.index.get_str()},
                {"indexOK", deg.index == ipow(n, 2 * (3 * genus - 1))},
                {"perfectSquare", deg.perfect_square},
                {"piDegreeReduced", deg.perfect_square ? json(to_int64(deg.pi_degree)) : json(nullptr)},
                {"eqK0Match", c0.equal},
                {"boundaryCentral", central},
                {"centralDefinitional", int_matrix_json(c0.definitional)},
                {"centralFormula", int_matrix_json(c0.formula)}};
    if (!deg.note.empty()) out["note"] = deg.note;
    if (refined) {
        const RefinedLattice ref(sigma_g_star(genus));
        const RefinedComparison cmp = compare_refined(ref, n);
        json r = {{"rank", ref.rank()},
                  {"basis", int_matrix_json(ref.basis())},
                  {"embedding", int_matrix_json(ref.embedding())},
                  {"form", int_matrix_json(ref.form())},
                  {"index", cmp.degree.index.get_str()},
                  {"expectedIndex", cmp.expected_index.get_str()},
                  {"indexMatchesExpected", cmp.index_matches_expected},
                  {"kernelsEqual", cmp.kernels_equal},
                  {"definitional", int_matrix_json(cmp.definitional)},
                  {"formula", int_matrix_json(cmp.formula)},
                  {"closedFormPairing", int_matrix_json(cmp.closed_form_pairing)},
                  {"pairingMismatches", cmp.pairing_mismatches},
                  {"pairingChecks", cmp.pairing_checks}};
        // The PI-degree is asserted only for the expected perfect-square index.
        r["piDegree"] = cmp.index_matches_expected && cmp.degree.perfect_square
                            ? json(cmp.degree.pi_degree.get_str())
                            : json(nullptr);
        out["refined"] = r;
    }
    return out;
}

json qtorus_selftest(int genus, long n) {
    const BalancedLattice lat(sigma_g_star(genus));
    auto torus = std::make_shared<const QuantumTorus>(lat.skew_lattice(), n);
    const TorusIrrep rho = build_irrep(*torus, trivial_character(*torus));
    const IrrepCheck chk = verify_irrep_omp(*torus, rho);
    std::mt19937_64 rng(static_cast<unsigned long>(1000 * genus + n));
    std::uniform_int_distribution<long> coord(-2, 2);
    std::size_t cheb_ok = 0;
    const std::size_t samples = 10;
    for (std::size_t s = 0; s < samples; ++s) {
        LatticeVector a(lat.rank()), minus(lat.rank());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = coord(rng);
            minus[i] = -a[i];
        }
        const TorusElement x = TorusElement::monomial(torus, a) + TorusElement::monomial(torus, minus);
        if (chebyshev_apply(x, n) == frobenius(x)) ++cheb_ok;
    }
    json invariants = json::array();
    for (const Integer& d : rho.block_invariants) invariants.push_back(d.get_str());
    return {{"genus", genus},
            {"N", n},
            {"rank", lat.rank()},
            {"dimension", rho.dimension},
            {"expectedDimension", ipow(n, 3 * genus - 1).get_str()},
            {"fieldOrder", rho.field_order},
            {"blockInvariants", invariants},
            {"relationChecks", chk.relation_checks},
            {"relationFailures", chk.relation_failures},
            {"centerChecks", chk.center_checks},
            {"centerFailures", chk.center_failures},
            {"chebyshevFrobenius", {{"checked", samples}, {"equal", cheb_ok}}},
            {"ok", chk.ok() && cheb_ok == samples}};
}

json qtrace(const NormalCurve& c, long n, bool brute, std::size_t cap) {
    EnumerationOptions opt;
    opt.cap = cap;
    const TraceSupport s = brute ? enumerate_states_bruteforce_omp(c, opt) : enumerate_admissible_states(c, opt);
    json out = support_json(s);
    out["curve"] = curve_json(c);
    out["boundsOK"] = support_bounds_check(s, c);
    out["method"] = brute ? "bruteforce" : "dp";
    if (n > 0) {
        const BalancedLattice lat(c.triangulation());
        const CosetReducer reducer(central_sublattice(lat, n).definitional * lat.basis());
        out["N"] = n;
        out["withinBound"] = c.max_coordinate() <= n - 1;
        out["injectiveModK0"] = support_injective_mod(s, reducer);
    }
    return out;
}

std::vector<FreeGroupEndomorphism> load_generators(const std::string& path, int genus) {
    std::vector<FreeGroupEndomorphism> gens;
    if (path.empty()) {
        if (genus != 1) throw std::invalid_argument("--gens is required above genus one");
        return {twist_alpha(), twist_beta()};
    }
    const json j = read_json_file(path);
    const json& list = j.is_object() && j.contains("generators") ? j.at("generators") : j;
    for (const json& g : list) gens.push_back(parse_automorphism(g, genus));
    return gens;
}

json orbit_json(const OrbitData& o, long n, bool with_points) {
    json out = {{"size", o.points.size()},
                {"cell", to_string(o.cell)},
                {"mu", sl2_json(o.mu)},
                {"generators", o.generators.size()},
                {"N", n},
                {"dimension", rep_dimension(o, n).get_str()}};
    if (with_points) {
        json pts = json::array();
        for (const SL2Rep& r : o.points) pts.push_back(rep_json(r));
        out["points"] = pts;
    }
    return out;
}

json hom_orbits(const std::vector<SL2Mat>& gens, int genus, long n, const std::vector<FreeGroupEndomorphism>& mcg,
                std::size_t cap) {
    const std::vector<SL2Mat> group = group_closure(gens, cap);
    const std::vector<SL2Rep> homs = enumerate_hom_to_finite(group, genus);
    std::set<std::string> seen;
    json orbits = json::array();
    for (const SL2Rep& h : homs) {
        if (seen.count(h.key())) continue;
        const OrbitData o = orbit_closure({h}, mcg, cap);
        for (const SL2Rep& p : o.points) seen.insert(p.key());
        orbits.push_back(orbit_json(o, n, false));
    }
    return {{"groupOrder", group.size()}, {"homomorphisms", homs.size()}, {"orbits", orbits}};
}

json selftest(bool timings) {
    json rows = json::array();
    bool all = true;
    for (const CriterionResult& r : run_acceptance()) {
        json row = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
        if (timings) row["seconds"] = r.seconds;
        rows.push_back(row);
        all = all && r.passed;
    }
    return {{"criteria", rows}, {"passed", all}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeinlab: lattices, quantum tori and kernel detection for stated skein representations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    SessionConfig cfg;
    std::string config_path;
    int threads = -1;
    int genus_opt = 0;
    long n_opt = 0;
    app.add_option("--config", config_path, "JSON session config")->check(CLI::ExistingFile);
    app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)")->check(CLI::NonNegativeNumber);

    auto add_common = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--genus", genus_opt, "surface genus")->check(CLI::PositiveNumber);
        if (with_n) sub->add_option("--N", n_opt, "odd root-of-unity order");
    };

    std::function<json()> action;

    CLI::App* surface = app.add_subcommand("surface", "triangulation data");
    surface->require_subcommand(1);
    CLI::App* surface_info_cmd = surface->add_subcommand("info", "built-in triangulation of the genus-g surface");
    add_common(surface_info_cmd, false);
    surface_info_cmd->callback([&] { action = [&] { return surface_info(cfg.genus); }; });

    CLI::App* lattice = app.add_subcommand("lattice", "balanced lattices");
    lattice->require_subcommand(1);
    CLI::App* lattice_info_cmd = lattice->add_subcommand("info", "index, PI-degree and central sublattice");
    add_common(lattice_info_cmd, true);
    bool refined = false;
    lattice_info_cmd->add_flag("--refined", refined, "include the refined lattice comparison");
    lattice_info_cmd->callback([&] { action = [&] { return lattice_info(cfg.genus, cfg.n, refined); }; });

    CLI::App* qt = app.add_subcommand("qtorus", "quantum torus checks");
    qt->require_subcommand(1);
    CLI::App* qt_self = qt->add_subcommand("selftest", "build and verify an irreducible representation");
    add_common(qt_self, true);
    qt_self->callback([&] { action = [&] { return qtorus_selftest(cfg.genus, cfg.n); }; });

    CLI::App* qtrace_cmd = app.add_subcommand("qtrace", "admissible states and quantum-trace support of a curve");
    add_common(qtrace_cmd, true);
    std::string curve_pq, curve_coords, curve_file;
    bool brute = false;
    qtrace_cmd->add_option("--curve", curve_pq, "torus curve \"p,q\"");
    qtrace_cmd->add_option("--coords", curve_coords, "normal coordinates \"x0,x1,...\"");
    qtrace_cmd->add_option("--curve-file", curve_file, "curve JSON")->check(CLI::ExistingFile);
    qtrace_cmd->add_flag("--bruteforce", brute, "use the 2^m reference enumerator");
    qtrace_cmd->callback([&] {
        action = [&] {
            const NormalCurve c = curve_from_options(curve_pq, curve_coords, curve_file, cfg.genus);
            return qtrace(c, n_opt ? cfg.n : 0, brute, cfg.state_cap);
        };
    });

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "finite mapping-class orbit of a representation");
    add_common(orbit_cmd, true);
    std::string rep_file, gens_file;
    std::size_t cap_opt = 0;
    bool with_points = false;
    orbit_cmd->add_option("--rep", rep_file, "representation JSON")->required()->check(CLI::ExistingFile);
    orbit_cmd->add_option("--gens", gens_file, "generator JSON (default: the genus-one twists)")->check(CLI::ExistingFile);
    orbit_cmd->add_option("--cap", cap_opt, "maximum orbit size");
    orbit_cmd->add_flag("--points", with_points, "list the orbit points");
    orbit_cmd->callback([&] {
        action = [&] {
            const SL2Rep rho = parse_rep(read_json_file(rep_file));
            const auto gens = load_generators(gens_file, rho.genus);
            return orbit_json(orbit_closure({rho}, gens, cap_opt ? cap_opt : cfg.orbit_cap), cfg.n, with_points);
        };
    });

    CLI::App* leaf = app.add_subcommand("leaf", "symplectic leaf classification");
    leaf->require_subcommand(1);
    std::string mat_text, mat2_text;
    int order_opt = 0;
    CLI::App* leaf_classify = leaf->add_subcommand("classify", "leaf of a matrix in the dual Poisson group");
    leaf_classify->add_option("--mat", mat_text, "matrix [[a,b],[c,d]]")->required();
    leaf_classify->add_option("--order", order_opt, "cyclotomic order for rational entries");
    leaf_classify->callback([&] {
        action = [&] {
            const SL2Mat m = parse_sl2(parse_matrix_text(mat_text), order_opt ? order_opt : cfg.cyclotomic_order);
            json out = leaf_json(classify_sts_leaf(m));
            out["matrix"] = sl2_json(m);
            return out;
        };
    });
    CLI::App* leaf_double = leaf->add_subcommand("double", "leaf indices of a pair in the double");
    leaf_double->add_option("--g1", mat_text, "first matrix")->required();
    leaf_double->add_option("--g2", mat2_text, "second matrix")->required();
    leaf_double->add_option("--order", order_opt, "cyclotomic order for rational entries");
    leaf_double->callback([&] {
        action = [&] {
            const int order = order_opt ? order_opt : cfg.cyclotomic_order;
            const auto [i, j] = classify_double_leaf(parse_sl2(parse_matrix_text(mat_text), order),
                                                     parse_sl2(parse_matrix_text(mat2_text), order));
            return json{{"i", i}, {"j", j}};
        };
    });

    CLI::App* rep = app.add_subcommand("rep", "representation dimensions and lifts");
    rep->require_subcommand(1);
    CLI::App* rep_dims = rep->add_subcommand("dims", "dimension of W(O)");
    add_common(rep_dims, true);
    std::string cell_opt = "big";
    std::size_t size_opt = 1;
    rep_dims->add_option("--cell", cell_opt, "big or reduced")->check(CLI::IsMember({"big", "reduced"}));
    rep_dims->add_option("--size", size_opt, "orbit size")->check(CLI::PositiveNumber);
    rep_dims->callback([&] {
        action = [&] {
            const Cell cell = cell_opt == "big" ? Cell::big : Cell::reduced;
            return json{{"genus", cfg.genus},
                        {"N", cfg.n},
                        {"cell", cell_opt},
                        {"orbitSize", size_opt},
                        {"dimension", rep_dimension(cell, cfg.genus, size_opt, cfg.n).get_str()}};
        };
    });
    CLI::App* rep_lifts = rep->add_subcommand("lifts", "lifts of a reduced-cell point");
    add_common(rep_lifts, true);
    rep_lifts->add_option("--rep", rep_file, "representation JSON")->required()->check(CLI::ExistingFile);
    rep_lifts->callback([&] {
        action = [&] {
            const ReducedCharacterSpace s = reduced_character_space(parse_rep(read_json_file(rep_file)), cfg.n);
            json lifts = json::array();
            for (const Cyclotomic& z : s.lifts) lifts.push_back(cyclotomic_json(z));
            return json{{"N", cfg.n}, {"mu", sl2_json(s.mu)}, {"fieldOrder", s.field_order}, {"lifts", lifts}};
        };
    });
    CLI::App* rep_orbits = rep->add_subcommand("orbits", "orbit decomposition of Hom(pi_1, H) for a finite group H");
    add_common(rep_orbits, true);
    std::string group_file;
    rep_orbits->add_option("--group", group_file, "JSON list of generator matrices")->required()->check(CLI::ExistingFile);
    rep_orbits->add_option("--gens", gens_file, "mapping-class generator JSON")->check(CLI::ExistingFile);
    rep_orbits->callback([&] {
        action = [&] {
            const json j = read_json_file(group_file);
            const int order = j.value("cyclotomicOrder", cfg.cyclotomic_order);
            std::vector<SL2Mat> gens;
            for (const json& m : j.at("generators")) gens.push_back(parse_sl2(m, order));
            return hom_orbits(gens, cfg.genus, cfg.n, load_generators(gens_file, cfg.genus), cfg.orbit_cap);
        };
    });

    CLI::App* detect = app.add_subcommand("detect", "kernel detection certificate");
    add_common(detect, true);
    std::string phi_text, words_file, beta_file, beta_coords, detect_cell = "reduced", method = "auto";
    bool timings = false;
    detect->add_option("--curve", curve_pq, "alpha as torus curve \"p,q\"");
    detect->add_option("--coords", curve_coords, "alpha normal coordinates");
    detect->add_option("--curve-file", curve_file, "alpha curve JSON")->check(CLI::ExistingFile);
    detect->add_option("--phi", phi_text, "genus-one matrix [[a,b],[c,d]]");
    detect->add_option("--words", words_file, "mapping class JSON {words: ...}")->check(CLI::ExistingFile);
    detect->add_option("--beta", beta_file, "beta curve JSON")->check(CLI::ExistingFile);
    detect->add_option("--beta-coords", beta_coords, "beta normal coordinates");
    detect->add_option("--cell", detect_cell, "reduced or big")->check(CLI::IsMember({"big", "reduced"}));
    detect->add_option("--method", method, "auto, edge-bound or support")
        ->check(CLI::IsMember({"auto", "edge-bound", "support"}));
    detect->add_flag("--timings", timings, "add wall-clock timings (output is then not byte-stable)");
    detect->callback([&] {
        action = [&] {
            const auto t0 = std::chrono::steady_clock::now();
            DetectionRequest req(curve_from_options(curve_pq, curve_coords, curve_file, cfg.genus));
            req.genus = cfg.genus;
            req.n = cfg.n;
            req.cell = detect_cell == "big" ? Cell::big : Cell::reduced;
            req.enumeration.cap = cfg.state_cap;
            if (!phi_text.empty()) req.phi = parse_mapping_class({{"matrix", parse_matrix_text(phi_text)}}, cfg.genus);
            if (!words_file.empty()) req.phi = parse_mapping_class(read_json_file(words_file), cfg.genus);
            if (!beta_file.empty() || !beta_coords.empty())
                req.beta = curve_from_options("", beta_coords, beta_file, cfg.genus);
            Certificate cert = method == "edge-bound" ? detect_edge_bound(req)
                               : method == "support"  ? detect_support(req)
                                                      : run_detection(req);
            json out = certificate_json(cert);
            if (req.phi) out["phi"] = mapping_class_json(*req.phi);
            if (timings)
                out["timings"] = {{"totalSeconds",
                                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            return out;
        };
    });

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");
    bool self_timings = false;
    self->add_flag("--timings", self_timings, "include per-criterion seconds");
    self->callback([&] { action = [&] { return selftest(self_timings); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        cfg.merge_environment();
        if (!config_path.empty()) cfg.merge_file(config_path);
        if (threads >= 0) cfg.threads = threads;
        if (genus_opt > 0) cfg.genus = genus_opt;
        if (n_opt != 0) cfg.n = n_opt;
        cfg.validate();
        cfg.apply();
        const json out = action();
        std::cout << out.dump(2) << "\n";
        if (self->parsed() && !out.at("passed").get<bool>()) return 1;
    } catch (const std::exception& e) {
        std::cerr << "skeinlab: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
