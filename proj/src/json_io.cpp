#include "skeinlab/json_io.hpp"

#include <stdexcept>

namespace skeinlab {

json rational_json(const Rational& q) {
    if (q.get_den() == 1 && fits_int64(q.get_num())) return to_int64(q.get_num());
    return to_string(q);
}

Rational parse_rational_json(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

json cyclotomic_json(const Cyclotomic& x) {
    json coeffs = json::array();
    for (const Rational& q : x.coeffs()) coeffs.push_back(rational_json(q));
    return {{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic parse_cyclotomic(const json& j, int default_order) {
    if (!j.is_object()) return Cyclotomic(default_order, parse_rational_json(j));
    const int order = j.at("order").get<int>();
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.push_back(parse_rational_json(c));
    return Cyclotomic(order, std::move(coeffs));
}

json int_matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
    return out;
}

json vector_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const Integer& z : v) out.push_back(rational_json(Rational(z)));
    return out;
}

json triangulation_json(const Triangulation& t) {
    json faces = json::array();
    for (const auto& f : t.faces()) faces.push_back({f[0], f[1], f[2]});
    json edges = json::array();
    for (std::size_t e = 0; e < t.num_edges(); ++e)
        edges.push_back({{"id", e}, {"boundary", t.is_boundary(static_cast<int>(e))}});
    return {{"id", t.id()},
            {"genus", t.genus()},
            {"faces", faces},
            {"edges", edges},
            {"gluing", t.gluing()},
            {"check", {{"euler", t.euler_characteristic()}, {"h1rank", t.h1_rank()}}}};
}

json sl2_json(const SL2Mat& m) {
    return json::array({json::array({cyclotomic_json(m.a()), cyclotomic_json(m.b())}),
                        json::array({cyclotomic_json(m.c()), cyclotomic_json(m.d())})});
}

SL2Mat parse_sl2(const json& j, int default_order) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array");
    std::vector<json> flat;
    if (j.size() == 2 && j[0].is_array() && j[1].is_array() && j[0].size() == 2 && j[1].size() == 2) {
        flat = {j[0][0], j[0][1], j[1][0], j[1][1]};
    } else if (j.size() == 4) {
        flat = {j[0], j[1], j[2], j[3]};
    } else {
        throw std::invalid_argument("matrix must be [[a,b],[c,d]] or [a,b,c,d]");
    }
    return SL2Mat(parse_cyclotomic(flat[0], default_order), parse_cyclotomic(flat[1], default_order),
                  parse_cyclotomic(flat[2], default_order), parse_cyclotomic(flat[3], default_order));
}

json rep_json(const SL2Rep& rho) {
    json images = json::array();
    for (const SL2Mat& m : rho.images)
        images.push_back({cyclotomic_json(m.a()), cyclotomic_json(m.b()), cyclotomic_json(m.c()),
                          cyclotomic_json(m.d())});
    return {{"genus", rho.genus}, {"field", {{"cyclotomicOrder", rho.order()}}}, {"images", images}};
}

SL2Rep parse_rep(const json& j) {
    const int genus = j.at("genus").get<int>();
    int order = 4;
    if (j.contains("field")) order = j.at("field").at("cyclotomicOrder").get<int>();
    std::vector<SL2Mat> images;
    for (const json& m : j.at("images")) images.push_back(parse_sl2(m, order));
    return SL2Rep(genus, std::move(images));
}

FreeGroupEndomorphism parse_automorphism(const json& j, int genus) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (genus == 1 && name == "T_alpha") return twist_alpha();
        if (genus == 1 && name == "T_beta") return twist_beta();
        throw std::invalid_argument("unknown built-in mapping class \"" + name + "\"");
    }
    const json& words = j.at("words");
    std::vector<FreeWord> images;
    for (int i = 1; i <= genus; ++i) {
        for (const char* letter : {"a", "b"}) {
            const std::string key = letter + std::to_string(i);
            const std::string fallback = genus == 1 ? std::string(letter) : key;
            if (words.contains(key)) images.push_back(parse_word(words.at(key).get<std::string>(), genus));
            else if (words.contains(fallback)) images.push_back(parse_word(words.at(fallback).get<std::string>(), genus));
            else images.push_back(parse_word(key, genus));  // unspecified generators are fixed
        }
    }
    FreeGroupEndomorphism phi(genus, std::move(images));
    if (!validate_automorphism(phi)) throw std::invalid_argument("word datum does not fix the boundary word");
    return phi;
}

MappingClass parse_mapping_class(const json& j, int genus) {
    if (j.is_object() && j.contains("matrix")) {
        if (genus != 1) throw std::invalid_argument("matrix mapping classes are genus one only");
        const json& m = j.at("matrix");
        SL2Z x{m.at(0).at(0).get<long>(), m.at(0).at(1).get<long>(), m.at(1).at(0).get<long>(),
               m.at(1).at(1).get<long>()};
        return MappingClass(x);
    }
    return MappingClass(parse_automorphism(j, genus));
}

json mapping_class_json(const MappingClass& phi) {
    if (phi.is_matrix()) {
        const SL2Z& m = phi.matrix();
        return {{"matrix", {{m.a, m.b}, {m.c, m.d}}}};
    }
    json words = json::object();
    const auto& imgs = phi.words().images();
    for (std::size_t k = 0; k < imgs.size(); ++k)
        words[(k % 2 == 0 ? "a" : "b") + std::to_string(k / 2 + 1)] = format_word(imgs[k]);
    return {{"words", words}};
}

NormalCurve parse_curve(const json& j, int genus) {
    if (j.contains("pq")) {
        if (genus != 1) throw std::invalid_argument("(p,q) shorthand is genus one only");
        return torus_curve(j.at("pq").at(0).get<long>(), j.at("pq").at(1).get<long>());
    }
    const TriangulationPtr t = sigma_g_star(genus);
    if (j.contains("triangulation") && j.at("triangulation").get<std::string>() != t->id())
        throw std::invalid_argument("unknown triangulation id \"" + j.at("triangulation").get<std::string>() + "\"");
    std::vector<int> coords(t->num_edges(), 0);
    const json& c = j.at("coords");
    if (c.is_array()) {
        if (c.size() != coords.size()) throw std::invalid_argument("coordinate array has the wrong length");
        for (std::size_t e = 0; e < coords.size(); ++e) coords[e] = c[e].get<int>();
    } else {
        for (const auto& [key, value] : c.items()) {
            const std::size_t e = std::stoul(key);
            if (e >= coords.size()) throw std::invalid_argument("edge id " + key + " out of range");
            coords[e] = value.get<int>();
        }
    }
    return NormalCurve(t, coords);
}

json curve_json(const NormalCurve& c) {
    json coords = json::object();
    for (std::size_t e = 0; e < c.coords().size(); ++e) coords[std::to_string(e)] = c.coords()[e];
    return {{"triangulation", c.triangulation()->id()}, {"coords", coords}};
}

json support_json(const TraceSupport& s) {
    json entries = json::array();
    for (const SupportEntry& e : s.entries) entries.push_back({{"k", e.k}, {"fiber", e.fiber}});
    return {{"points", s.points}, {"admissibleStates", s.admissible_states}, {"support", entries}};
}

json certificate_json(const Certificate& c) {
    json out = {{"verdict", to_string(c.verdict)},
                {"method", c.method},
                {"N", c.n},
                {"genus", c.genus},
                {"cell", to_string(c.cell)},
                {"alpha", c.alpha},
                {"beta", c.beta},
                {"reasons", c.reasons},
                {"assumptions", c.assumptions},
                {"cosets", {{"alpha", c.cosets_alpha}, {"beta", c.cosets_beta}}},
                {"witness", nullptr},
                {"verification", nullptr}};
    if (c.witness) {
        out["witness"] = {{"k", c.witness->k},
                          {"coset", c.witness->coset},
                          {"fiberAlpha", c.witness->fiber_alpha},
                          {"fiberBeta", c.witness->fiber_beta},
                          {"swapped", c.witness->swapped}};
    }
    if (c.verification) {
        out["verification"] = {{"method", c.verification->method},
                               {"fiberAlpha", c.verification->fiber_alpha},
                               {"fiberBeta", c.verification->fiber_beta},
                               {"ok", c.verification->ok}};
    }
    return out;
}

json leaf_json(const LeafDescriptor& d) {
    json out = {{"cell", d.cell}, {"trace", cyclotomic_json(d.trace)}, {"kind", to_string(d.kind)}};
    out["leaf"] = d.cell == 1 ? "singleton" : "cell-conjugacy-intersection";
    out["dressingB"] = d.dressing_b ? cyclotomic_json(*d.dressing_b) : json(nullptr);
    return out;
}

json torus_element_json(const TorusElement& x) {
    json terms = json::array();
    for (const auto& [exp, coeff] : x.terms()) terms.push_back({{"exp", exp}, {"coeff", cyclotomic_json(coeff)}});
    return {{"lattice", x.torus()->lattice().id}, {"terms", terms}};
}

}  // namespace skeinlab
