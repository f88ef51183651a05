#include "skeinlab/states.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>


namespace skeinlab {

namespace {

using KMap = std::map<std::vector<long>, std::uint64_t>;

TraceSupport to_support(const KMap& m, std::size_t points) {
    TraceSupport s;
    s.points = points;
    for (const auto& [k, n] : m) {
        s.entries.push_back({k, n});
        s.admissible_states += n;
    }
    return s;
}

void check_cap(std::size_t points, std::size_t cap) {
    if (points > cap) throw CapExceeded(points, cap);
}

struct Piece {
    int a, b;  // point indices
};

std::vector<Piece> pieces(const CurveGraph& g) {
    std::vector<Piece> out;
    out.reserve(g.arcs.size());
    for (const auto& arc : g.arcs) out.push_back({arc.a_point, arc.b_point});
    return out;
}

// Brute-force scan of masks in [lo, hi) into a local map.
void scan_masks(const std::vector<Piece>& ps, const std::vector<std::uint64_t>& edge_mask,
                const std::vector<int>& coords, std::uint64_t lo, std::uint64_t hi, KMap& out) {
    std::vector<long> k(coords.size());
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        bool ok = true;
        for (const auto& p : ps) {
            const int sa = (mask >> p.a) & 1 ? 1 : -1;
            const int sb = (mask >> p.b) & 1 ? 1 : -1;
            if (!corner_piece_admissible(sa, sb)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::size_t e = 0; e < coords.size(); ++e)
            k[e] = 2L * __builtin_popcountll(mask & edge_mask[e]) - coords[e];
        ++out[k];
    }
}

std::vector<std::uint64_t> edge_masks(const CurveGraph& g, std::size_t ne) {
    std::vector<std::uint64_t> m(ne, 0);
    for (std::size_t i = 0; i < g.points.size(); ++i) m[g.points[i].edge] |= (std::uint64_t{1} << i);
    return m;
}

constexpr std::size_t kBruteForceLimit = 40;

}  // namespace

CapExceeded::CapExceeded(std::size_t points_, std::size_t cap_)
    : std::runtime_error("curve has " + std::to_string(points_) + " intersection points, above the enumeration cap of " +
                         std::to_string(cap_) + "; use a smaller curve or raise the cap"),
      points(points_),
      cap(cap_) {}

const SupportEntry* TraceSupport::find(const std::vector<long>& k) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), k,
                               [](const SupportEntry& e, const std::vector<long>& key) { return e.k < key; });
    return it != entries.end() && it->k == k ? &*it : nullptr;
}

TraceSupport enumerate_admissible_states(const NormalCurve& c, const EnumerationOptions& opt) {
    const std::size_t m = static_cast<std::size_t>(c.total());
    check_cap(m, opt.cap);
    const std::size_t ne = c.coords().size();
    const CurveGraph g = trace_curve(c);

    KMap total;
    total[std::vector<long>(ne, 0)] = 1;
    for (const auto& comp : g.components) {
        const std::size_t len = comp.points.size();
        KMap comp_map;
        // A closed strand pins the first state so the closing piece can be checked.
        for (int s0 : {1, -1}) {
            // Index 0 holds the "+" branch, 1 the "-" branch of the current point.
            std::array<KMap, 2> cur;
            std::vector<long> k0(ne, 0);
            k0[g.points[comp.points[0]].edge] += s0;
            cur[s0 > 0 ? 0 : 1][k0] = 1;
            for (std::size_t t = 1; t < len; ++t) {
                const CornerArc& arc = g.arcs[comp.arcs[t - 1]];
                const bool prev_is_a = arc.a_point == comp.points[t - 1];
                const int edge = g.points[comp.points[t]].edge;
                std::array<KMap, 2> next;
                for (int sp_idx = 0; sp_idx < 2; ++sp_idx) {
                    const int sp = sp_idx == 0 ? 1 : -1;
                    for (const auto& [k, n] : cur[sp_idx])
                        for (int s : {1, -1}) {
                            const bool ok = prev_is_a ? corner_piece_admissible(sp, s) : corner_piece_admissible(s, sp);
                            if (!ok) continue;
                            std::vector<long> k2 = k;
                            k2[edge] += s;
                            next[s > 0 ? 0 : 1][k2] += n;
                        }
                }
                cur = std::move(next);
            }
            for (int sp_idx = 0; sp_idx < 2; ++sp_idx) {
                const int sp = sp_idx == 0 ? 1 : -1;
                if (comp.closed) {
                    const CornerArc& close = g.arcs[comp.arcs[len - 1]];
                    const bool last_is_a = close.a_point == comp.points[len - 1];
                    const bool ok = last_is_a ? corner_piece_admissible(sp, s0) : corner_piece_admissible(s0, sp);
                    if (!ok) continue;
                }
                for (const auto& [k, n] : cur[sp_idx]) comp_map[k] += n;
            }
        }
        KMap merged;
        for (const auto& [k1, n1] : total)
            for (const auto& [k2, n2] : comp_map) {
                std::vector<long> k(ne);
                for (std::size_t e = 0; e < ne; ++e) k[e] = k1[e] + k2[e];
                merged[k] += n1 * n2;
            }
        total = std::move(merged);
    }
    return to_support(total, m);
}

TraceSupport enumerate_states_bruteforce_serial(const NormalCurve& c, const EnumerationOptions& opt) {
    const std::size_t m = static_cast<std::size_t>(c.total());
    check_cap(m, std::min(opt.cap, kBruteForceLimit));
    const CurveGraph g = trace_curve(c);
    KMap out;
    scan_masks(pieces(g), edge_masks(g, c.coords().size()), c.coords(), 0, std::uint64_t{1} << m, out);
    return to_support(out, m);
}

TraceSupport enumerate_states_bruteforce_omp(const NormalCurve& c, const EnumerationOptions& opt) {
    const std::size_t m = static_cast<std::size_t>(c.total());
    check_cap(m, std::min(opt.cap, kBruteForceLimit));
    const CurveGraph g = trace_curve(c);
    const auto ps = pieces(g);
    const auto em = edge_masks(g, c.coords().size());
    const std::uint64_t total = std::uint64_t{1} << m;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
    const long nchunks = static_cast<long>((total + chunk - 1) / chunk);
    std::vector<KMap> partial(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nchunks; ++i) {
        const std::uint64_t lo = static_cast<std::uint64_t>(i) * chunk;
        scan_masks(ps, em, c.coords(), lo, std::min(total, lo + chunk), partial[i]);
    }
    // Merge in chunk order; sums are order independent anyway.
    KMap out;
    for (const auto& p : partial)
        for (const auto& [k, n] : p) out[k] += n;
    return to_support(out, m);
}

bool support_bounds_check(const TraceSupport& s, const NormalCurve& c) {
    const auto& x = c.coords();
    const auto boundary = c.triangulation()->boundary_edges();
    for (const auto& entry : s.entries) {
        if (entry.k.size() != x.size()) return false;
        for (std::size_t e = 0; e < x.size(); ++e) {
            if (std::labs(entry.k[e]) > x[e]) return false;
            if ((entry.k[e] - x[e]) % 2 != 0) return false;
        }
        for (int e : boundary)
            if (entry.k[e] != 0) return false;
    }
    return true;
}

bool support_injective_mod(const TraceSupport& s, const CosetReducer& reducer) {
    std::set<std::vector<long>> seen;
    for (const auto& entry : s.entries)
        if (!seen.insert(reducer.reduce(entry.k)).second) return false;
    return true;
}

}  // namespace skeinlab
