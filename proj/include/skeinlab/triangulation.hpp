#pragma once

#include "skeinlab/int_matrix.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace skeinlab {

struct SlotRef {
    int face = -1;
    int slot = -1;
    friend bool operator==(const SlotRef& a, const SlotRef& b) { return a.face == b.face && a.slot == b.slot; }
    friend bool operator<(const SlotRef& a, const SlotRef& b) {
        return a.face != b.face ? a.face < b.face : a.slot < b.slot;
    }
};

// Faces are triangles with three edge slots in counter-clockwise order; slot j
// runs from corner j to corner j+1. An inner edge occupies two slots and the
// gluing always reverses direction, so corner j of one slot meets corner j+1
// of the other. Boundary arcs occupy one slot.
class Triangulation {
public:
    Triangulation(std::string id, std::vector<std::array<int, 3>> faces, int genus);

    const std::string& id() const { return id_; }
    int genus() const { return genus_; }
    std::size_t num_faces() const { return faces_.size(); }
    std::size_t num_edges() const { return occurrences_.size(); }
    std::size_t num_inner_edges() const;
    std::size_t num_boundary_edges() const { return num_edges() - num_inner_edges(); }
    std::size_t num_vertices() const { return num_vertices_; }
    long euler_characteristic() const;
    std::size_t h1_rank() const { return h1_rank_; }

    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    int edge_at(int face, int slot) const { return faces_[face][slot]; }
    bool is_boundary(int edge) const { return occurrences_[edge].size() == 1; }
    std::vector<int> boundary_edges() const;
    // First entry is the orienting occurrence.
    const std::vector<SlotRef>& occurrences(int edge) const { return occurrences_[edge]; }
    bool is_first_occurrence(int face, int slot) const;
    // The other slot of an inner edge.
    SlotRef partner(int face, int slot) const;

    // Integer boundary maps in the cellular chain complex.
    IntMatrix boundary1() const;  // E x V, rows are edges
    IntMatrix boundary2() const;  // F x E, rows are faces

    std::vector<std::vector<int>> gluing() const;  // [f, s, f', s'] per inner edge

    // Returns a description of the first failed check, or an empty string.
    std::string validation_error(bool require_single_boundary) const;

private:
    std::string id_;
    std::vector<std::array<int, 3>> faces_;
    std::vector<std::vector<SlotRef>> occurrences_;
    std::vector<std::array<int, 3>> corner_vertex_;
    int genus_;
    std::size_t num_vertices_ = 0;
    std::size_t h1_rank_ = 0;
};

using TriangulationPtr = std::shared_ptr<const Triangulation>;

// Annulus plus one fusion triangle per handle; exactly one boundary arc.
TriangulationPtr build_sigma_g_star(int g);

// Cached instances of build_sigma_g_star.
TriangulationPtr sigma_g_star(int g);

// a_{e,e'} - a_{e',e} over ccw-consecutive slot pairs.
IntMatrix wp_form(const Triangulation& t);

}  // namespace skeinlab
