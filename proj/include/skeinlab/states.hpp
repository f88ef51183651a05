#pragma once

#include "skeinlab/lattice.hpp"
#include "skeinlab/normal_curve.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace skeinlab {

struct SupportEntry {
    std::vector<long> k;     // balanced map k(s) on edges
    std::uint64_t fiber = 0;  // number of admissible states with this k
    friend bool operator==(const SupportEntry& a, const SupportEntry& b) { return a.k == b.k && a.fiber == b.fiber; }
};

// Sorted lexicographically by k.
struct TraceSupport {
    std::vector<SupportEntry> entries;
    std::uint64_t admissible_states = 0;
    std::size_t points = 0;

    const SupportEntry* find(const std::vector<long>& k) const;
    friend bool operator==(const TraceSupport& a, const TraceSupport& b) {
        return a.entries == b.entries && a.admissible_states == b.admissible_states && a.points == b.points;
    }
};

struct EnumerationOptions {
    std::size_t cap = 24;  // maximum number of intersection points
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t points, std::size_t cap);
    std::size_t points;
    std::size_t cap;
};

// Component-by-component transfer along each closed strand, then a
// convolution across components.
TraceSupport enumerate_admissible_states(const NormalCurve& c, const EnumerationOptions& opt = {});

// Reference filter over all 2^m full states.
TraceSupport enumerate_states_bruteforce_serial(const NormalCurve& c, const EnumerationOptions& opt = {});
TraceSupport enumerate_states_bruteforce_omp(const NormalCurve& c, const EnumerationOptions& opt = {});

// |k(e)| <= x_e, k(e) = x_e mod 2, and k vanishes on boundary arcs.
bool support_bounds_check(const TraceSupport& s, const NormalCurve& c);

// True iff distinct support elements have distinct cosets.
bool support_injective_mod(const TraceSupport& s, const CosetReducer& reducer);

// Admissibility of one corner piece given endpoint states (+1 / -1).
inline bool corner_piece_admissible(int a_side, int b_side) { return !(a_side > 0 && b_side < 0); }

}  // namespace skeinlab
