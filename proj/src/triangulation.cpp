#include "skeinlab/triangulation.hpp"

#include "skeinlab/lattice.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace skeinlab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::size_t matrix_rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return hermite_normal_form(m).rows();
}

}  // namespace

Triangulation::Triangulation(std::string id, std::vector<std::array<int, 3>> faces, int genus)
    : id_(std::move(id)), faces_(std::move(faces)), genus_(genus) {
    int max_edge = -1;
    for (const auto& f : faces_)
        for (int e : f) {
            if (e < 0) throw std::invalid_argument("negative edge id");
            max_edge = std::max(max_edge, e);
        }
    occurrences_.assign(max_edge + 1, {});
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        for (int s = 0; s < 3; ++s) occurrences_[faces_[f][s]].push_back({f, s});
    for (std::size_t e = 0; e < occurrences_.size(); ++e)
        if (occurrences_[e].empty() || occurrences_[e].size() > 2)
            throw std::invalid_argument("edge " + std::to_string(e) + " must occupy one or two slots");

    UnionFind uf(3 * faces_.size());
    for (const auto& occ : occurrences_) {
        if (occ.size() != 2) continue;
        const auto [f, j] = occ[0];
        const auto [g, k] = occ[1];
        uf.unite(3 * f + j, 3 * g + (k + 1) % 3);
        uf.unite(3 * f + (j + 1) % 3, 3 * g + k);
    }
    std::map<int, int> roots;
    corner_vertex_.resize(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (int c = 0; c < 3; ++c) {
            int r = uf.find(static_cast<int>(3 * f + c));
            auto it = roots.emplace(r, static_cast<int>(roots.size())).first;
            corner_vertex_[f][c] = it->second;
        }
    num_vertices_ = roots.size();

    const std::size_t cycles = num_edges() - matrix_rank(boundary1());
    h1_rank_ = cycles - matrix_rank(boundary2());
}

std::size_t Triangulation::num_inner_edges() const {
    std::size_t n = 0;
    for (const auto& occ : occurrences_) n += occ.size() == 2;
    return n;
}

long Triangulation::euler_characteristic() const {
    return static_cast<long>(num_vertices_) - static_cast<long>(num_edges()) + static_cast<long>(num_faces());
}

std::vector<int> Triangulation::boundary_edges() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < occurrences_.size(); ++e)
        if (occurrences_[e].size() == 1) out.push_back(static_cast<int>(e));
    return out;
}

bool Triangulation::is_first_occurrence(int face, int slot) const {
    return occurrences_[faces_[face][slot]].front() == SlotRef{face, slot};
}

SlotRef Triangulation::partner(int face, int slot) const {
    const auto& occ = occurrences_[faces_[face][slot]];
    if (occ.size() != 2) throw std::invalid_argument("boundary arc has no partner slot");
    return occ[0] == SlotRef{face, slot} ? occ[1] : occ[0];
}

IntMatrix Triangulation::boundary1() const {
    IntMatrix m(num_edges(), num_vertices_);
    for (std::size_t e = 0; e < num_edges(); ++e) {
        const auto [f, j] = occurrences_[e].front();
        m(e, corner_vertex_[f][(j + 1) % 3]) += 1;
        m(e, corner_vertex_[f][j]) -= 1;
    }
    return m;
}

IntMatrix Triangulation::boundary2() const {
    IntMatrix m(num_faces(), num_edges());
    for (std::size_t f = 0; f < num_faces(); ++f)
        for (int j = 0; j < 3; ++j)
            m(f, faces_[f][j]) += is_first_occurrence(static_cast<int>(f), j) ? 1 : -1;
    return m;
}

std::vector<std::vector<int>> Triangulation::gluing() const {
    std::vector<std::vector<int>> out;
    for (const auto& occ : occurrences_)
        if (occ.size() == 2) out.push_back({occ[0].face, occ[0].slot, occ[1].face, occ[1].slot});
    return out;
}

std::string Triangulation::validation_error(bool require_single_boundary) const {
    if (3 * num_faces() != 2 * num_inner_edges() + num_boundary_edges())
        return "slot count 3F != 2E_inner + B";
    if (require_single_boundary && num_boundary_edges() != 1) return "expected exactly one boundary arc";
    if (euler_characteristic() != 1 - 2L * genus_) return "Euler characteristic is not 1 - 2g";
    if (h1_rank_ != static_cast<std::size_t>(2 * genus_)) return "first homology rank is not 2g";
    if (!(boundary2() * boundary1()).is_zero()) return "boundary maps do not compose to zero";
    return {};
}

TriangulationPtr build_sigma_g_star(int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    // Annulus D_1^+: faces (a,x,y), (b,x,y) with inner edges x, y; fusion
    // triangle (a,b,k) leaves k as the only boundary arc.
    const std::vector<std::array<int, 3>> handle{{0, 1, 2}, {3, 1, 2}, {0, 3, 4}};
    std::vector<std::array<int, 3>> faces = handle;
    int boundary = 4;
    int next = 5;
    for (int h = 1; h < g; ++h) {
        const int offset = next;
        for (const auto& f : handle) faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
        const int fresh = offset + 5;
        faces.push_back({boundary, offset + 4, fresh});
        boundary = fresh;
        next = fresh + 1;
    }
    auto t = std::make_shared<Triangulation>("Delta_" + std::to_string(g), std::move(faces), g);
    const std::string err = t->validation_error(true);
    if (!err.empty()) throw std::logic_error("built triangulation failed validation: " + err);
    return t;
}

TriangulationPtr sigma_g_star(int g) {
    static std::mutex mu;
    static std::map<int, TriangulationPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, build_sigma_g_star(g)).first;
    return it->second;
}

IntMatrix wp_form(const Triangulation& t) {
    const std::size_t n = t.num_edges();
    IntMatrix w(n, n);
    for (const auto& f : t.faces())
        for (int j = 0; j < 3; ++j) {
            const int e = f[j], e2 = f[(j + 1) % 3];
            w(e, e2) += 1;
            w(e2, e) -= 1;
        }
    return w;
}

}  // namespace skeinlab
