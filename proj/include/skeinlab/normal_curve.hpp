#pragma once

#include "skeinlab/triangulation.hpp"

#include <array>
#include <string>
#include <vector>

namespace skeinlab {

// Normal coordinates (intersection counts per edge) on a fixed triangulation.
class NormalCurve {
public:
    NormalCurve(TriangulationPtr t, std::vector<int> coords);
    static NormalCurve empty(TriangulationPtr t);

    const TriangulationPtr& triangulation() const { return tri_; }
    const std::vector<int>& coords() const { return coords_; }
    int coord(int edge) const { return coords_[edge]; }
    int total() const;
    int max_coordinate() const;
    bool is_empty() const { return total() == 0; }
    // Arcs cutting off corner j of a face, between slots j and j+1.
    int corner_count(int face, int corner) const;

    friend bool operator==(const NormalCurve& a, const NormalCurve& b) {
        return a.tri_ == b.tri_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const NormalCurve& a, const NormalCurve& b) { return !(a == b); }

private:
    TriangulationPtr tri_;
    std::vector<int> coords_;
};

// Empty string when coords satisfy the per-face parity and corner conditions.
std::string normal_coordinates_error(const Triangulation& t, const std::vector<int>& coords);

struct CurvePoint {
    int edge;
    int position;  // along the edge's orienting slot
};

// One normal arc inside a face. The a-side endpoint lies on slot `corner`, the
// b-side endpoint on slot `corner + 1`.
struct CornerArc {
    int face;
    int corner;
    int a_point;
    int b_point;
};

// A strand traversed in order: arcs[t] joins points[t] to points[t+1], indices
// taken cyclically for closed strands. Open strands start and end on boundary arcs.
struct CurveComponent {
    bool closed = true;
    std::vector<int> points;
    std::vector<int> arcs;
    std::vector<int> signed_crossings;  // per edge, for this traversal direction
};

struct CurveGraph {
    std::vector<CurvePoint> points;
    std::vector<CornerArc> arcs;
    std::vector<CurveComponent> components;
    std::vector<int> point_offset;  // first point index per edge
};

CurveGraph trace_curve(const NormalCurve& c);

// Two edges whose loops form a Z-basis of H_1 (one-vertex genus-1 triangulations).
std::array<int, 2> homology_edge_pair(const Triangulation& t);

// (p, q) = signed crossings with the two basis edges; the pair is defined up to
// a global sign because curves are unoriented. Requires a connected curve.
std::array<long, 2> torus_homology(const NormalCurve& c);

// All normal curves with boundary coordinates zero and total weight <= max_weight.
std::vector<NormalCurve> enumerate_normal_curves(TriangulationPtr t, int max_weight, bool connected_only);

// The (p,q) simple closed curve on the built-in Delta_1.
NormalCurve torus_curve(long p, long q);

// Reference search: minimal-weight connected curve in class +-(p,q).
NormalCurve torus_curve_by_search(long p, long q, int max_weight);

}  // namespace skeinlab
