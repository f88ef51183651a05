#include "skeinlab/normal_curve.hpp"

#include "skeinlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace skeinlab {

std::string normal_coordinates_error(const Triangulation& t, const std::vector<int>& coords) {
    if (coords.size() != t.num_edges()) return "coordinate vector length does not match edge count";
    for (int x : coords)
        if (x < 0) return "negative normal coordinate";
    for (std::size_t f = 0; f < t.num_faces(); ++f) {
        const auto& e = t.faces()[f];
        const int x = coords[e[0]], y = coords[e[1]], z = coords[e[2]];
        if ((x + y + z) % 2 != 0) return "odd coordinate sum on face " + std::to_string(f);
        if (x + y < z || y + z < x || z + x < y) return "negative corner count on face " + std::to_string(f);
    }
    return {};
}

NormalCurve::NormalCurve(TriangulationPtr t, std::vector<int> coords) : tri_(std::move(t)), coords_(std::move(coords)) {
    const std::string err = normal_coordinates_error(*tri_, coords_);
    if (!err.empty()) throw std::invalid_argument("invalid normal coordinates: " + err);
}

NormalCurve NormalCurve::empty(TriangulationPtr t) {
    const std::size_t n = t->num_edges();
    return NormalCurve(std::move(t), std::vector<int>(n, 0));
}

int NormalCurve::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

int NormalCurve::max_coordinate() const {
    return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
}

int NormalCurve::corner_count(int face, int corner) const {
    const auto& e = tri_->faces()[face];
    return (coords_[e[corner]] + coords_[e[(corner + 1) % 3]] - coords_[e[(corner + 2) % 3]]) / 2;
}

CurveGraph trace_curve(const NormalCurve& c) {
    const Triangulation& t = *c.triangulation();
    CurveGraph g;
    g.point_offset.resize(t.num_edges() + 1, 0);
    for (std::size_t e = 0; e < t.num_edges(); ++e) {
        g.point_offset[e + 1] = g.point_offset[e] + c.coord(static_cast<int>(e));
        for (int p = 0; p < c.coord(static_cast<int>(e)); ++p) g.points.push_back({static_cast<int>(e), p});
    }

    // Slot-local endpoints: id = slot_offset[3f+j] + local position from corner j.
    const std::size_t nf = t.num_faces();
    std::vector<int> slot_offset(3 * nf + 1, 0);
    for (std::size_t s = 0; s < 3 * nf; ++s) slot_offset[s + 1] = slot_offset[s] + c.coord(t.faces()[s / 3][s % 3]);
    const int nids = slot_offset[3 * nf];
    std::vector<int> id_point(nids), id_arc(nids, -1), id_other(nids, -1), id_slot(nids);
    std::vector<std::array<int, 2>> point_ids(g.points.size(), {-1, -1});
    for (std::size_t s = 0; s < 3 * nf; ++s) {
        const int f = static_cast<int>(s / 3), j = static_cast<int>(s % 3);
        const int e = t.faces()[f][j];
        const int x = c.coord(e);
        const bool first = t.is_first_occurrence(f, j);
        for (int p = 0; p < x; ++p) {
            const int id = slot_offset[s] + p;
            const int point = g.point_offset[e] + (first ? p : x - 1 - p);
            id_point[id] = point;
            id_slot[id] = static_cast<int>(s);
            point_ids[point][point_ids[point][0] < 0 ? 0 : 1] = id;
        }
    }
    for (std::size_t f = 0; f < nf; ++f)
        for (int j = 0; j < 3; ++j) {
            const int s_a = static_cast<int>(3 * f + j), s_b = static_cast<int>(3 * f + (j + 1) % 3);
            const int xa = c.coord(t.faces()[f][j]);
            const int n = c.corner_count(static_cast<int>(f), j);
            for (int k = 0; k < n; ++k) {
                const int ida = slot_offset[s_a] + xa - 1 - k;
                const int idb = slot_offset[s_b] + k;
                const int arc = static_cast<int>(g.arcs.size());
                g.arcs.push_back({static_cast<int>(f), j, id_point[ida], id_point[idb]});
                id_arc[ida] = id_arc[idb] = arc;
                id_other[ida] = idb;
                id_other[idb] = ida;
            }
        }

    std::vector<char> seen(g.points.size(), 0);
    auto walk = [&](int id0, bool closed) {
        CurveComponent comp;
        comp.closed = closed;
        comp.signed_crossings.assign(t.num_edges(), 0);
        int id = id0;
        for (;;) {
            seen[id_point[id]] = 1;
            comp.points.push_back(id_point[id]);
            const int exit_id = id_other[id];
            comp.arcs.push_back(id_arc[id]);
            const int s = id_slot[exit_id];
            const int e = t.faces()[s / 3][s % 3];
            comp.signed_crossings[e] += t.is_first_occurrence(s / 3, s % 3) ? 1 : -1;
            const auto& pair = point_ids[id_point[exit_id]];
            if (pair[1] < 0) {  // reached a boundary arc
                seen[id_point[exit_id]] = 1;
                comp.points.push_back(id_point[exit_id]);
                break;
            }
            id = pair[0] == exit_id ? pair[1] : pair[0];
            if (id == id0) break;
        }
        g.components.push_back(std::move(comp));
    };
    // Open strands first, from their lower-numbered boundary endpoint.
    for (std::size_t start = 0; start < g.points.size(); ++start)
        if (!seen[start] && point_ids[start][1] < 0) walk(point_ids[start][0], false);
    for (std::size_t start = 0; start < g.points.size(); ++start)
        if (!seen[start]) walk(point_ids[start][0], true);
    return g;
}

std::array<int, 2> homology_edge_pair(const Triangulation& t) {
    if (t.num_vertices() != 1 || t.h1_rank() != 2)
        throw std::invalid_argument("homology edge pair needs a one-vertex genus-1 triangulation");
    const IntMatrix d2 = t.boundary2();
    const std::size_t ne = t.num_edges();
    for (std::size_t e1 = 0; e1 < ne; ++e1)
        for (std::size_t e2 = e1 + 1; e2 < ne; ++e2) {
            IntMatrix m = d2;
            std::vector<Integer> r1(ne, 0), r2(ne, 0);
            r1[e1] = 1;
            r2[e2] = 1;
            m.append_row(r1);
            m.append_row(r2);
            if (hermite_normal_form(m) == IntMatrix::identity(ne))
                return {static_cast<int>(e1), static_cast<int>(e2)};
        }
    throw std::logic_error("no pair of edges spans first homology");
}

std::array<long, 2> torus_homology(const NormalCurve& c) {
    if (c.is_empty()) return {0, 0};
    const CurveGraph g = trace_curve(c);
    if (g.components.size() != 1 || !g.components.front().closed)
        throw std::invalid_argument("torus homology needs a connected closed curve");
    const auto pair = homology_edge_pair(*c.triangulation());
    const auto& s = g.components.front().signed_crossings;
    return {s[pair[0]], s[pair[1]]};
}

namespace {

void enumerate_rec(const Triangulation& t, const std::vector<int>& free_edges, std::size_t idx, int budget,
                   std::vector<int>& coords, std::vector<std::vector<int>>& out) {
    if (idx == free_edges.size()) {
        if (normal_coordinates_error(t, coords).empty()) out.push_back(coords);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        coords[free_edges[idx]] = v;
        enumerate_rec(t, free_edges, idx + 1, budget - v, coords, out);
    }
    coords[free_edges[idx]] = 0;
}

bool same_class(const std::array<long, 2>& h, long p, long q) {
    return (h[0] == p && h[1] == q) || (h[0] == -p && h[1] == -q);
}

}  // namespace

std::vector<NormalCurve> enumerate_normal_curves(TriangulationPtr t, int max_weight, bool connected_only) {
    std::vector<int> free_edges;
    for (std::size_t e = 0; e < t->num_edges(); ++e)
        if (!t->is_boundary(static_cast<int>(e))) free_edges.push_back(static_cast<int>(e));
    std::vector<int> coords(t->num_edges(), 0);
    std::vector<std::vector<int>> raw;
    enumerate_rec(*t, free_edges, 0, max_weight, coords, raw);
    std::vector<NormalCurve> out;
    for (auto& v : raw) {
        NormalCurve c(t, v);
        if (c.is_empty()) continue;
        if (connected_only && trace_curve(c).components.size() != 1) continue;  // boundary coords are zero here
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const NormalCurve& a, const NormalCurve& b) { return a.total() < b.total(); });
    return out;
}

NormalCurve torus_curve_by_search(long p, long q, int max_weight) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus curve needs coprime (p, q)");
    auto t = sigma_g_star(1);
    std::vector<NormalCurve> hits;
    int best = -1;
    for (const auto& c : enumerate_normal_curves(t, max_weight, true)) {
        if (best >= 0 && c.total() > best) break;
        if (same_class(torus_homology(c), p, q)) {
            best = c.total();
            hits.push_back(c);
        }
    }
    if (hits.empty()) throw std::runtime_error("no curve in class within weight bound");
    if (hits.size() != 1) throw std::logic_error("minimal-weight curve in class is not unique");
    return hits.front();
}

NormalCurve torus_curve(long p, long q) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus curve needs coprime (p, q), got (" +
                                                         std::to_string(p) + "," + std::to_string(q) + ")");
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::vector<int>> cache;
    static std::vector<int> alpha_s, beta_s;
    auto t = sigma_g_star(1);
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, q}); it != cache.end()) return NormalCurve(t, it->second);

    // Crossing counts are linear in the homology class; the candidate is the
    // absolute value of that linear form, confirmed by tracing.
    if (alpha_s.empty()) {
        for (auto [pp, qq, dst] : {std::tuple{1L, 0L, &alpha_s}, std::tuple{0L, 1L, &beta_s}}) {
            NormalCurve base = torus_curve_by_search(pp, qq, 8);
            const auto comp = trace_curve(base).components.front();
            const auto h = torus_homology(base);
            const int sign = (h[0] == pp && h[1] == qq) ? 1 : -1;
            dst->resize(comp.signed_crossings.size());
            for (std::size_t e = 0; e < dst->size(); ++e) (*dst)[e] = sign * comp.signed_crossings[e];
        }
    }
    std::vector<int> cand(alpha_s.size());
    for (std::size_t e = 0; e < cand.size(); ++e) cand[e] = static_cast<int>(std::labs(p * alpha_s[e] + q * beta_s[e]));
    if (normal_coordinates_error(*t, cand).empty()) {
        NormalCurve c(t, cand);
        if (trace_curve(c).components.size() == 1 && same_class(torus_homology(c), p, q)) {
            cache.emplace(std::make_pair(p, q), cand);
            return c;
        }
    }
    NormalCurve c = torus_curve_by_search(p, q, static_cast<int>(4 * (std::labs(p) + std::labs(q)) + 8));
    cache.emplace(std::make_pair(p, q), c.coords());
    return c;
}

}  // namespace skeinlab
