#include "skeinlab/detect.hpp"

#include "skeinlab/balanced_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace skeinlab {

namespace {

constexpr std::size_t kBruteForceLimit = 26;

struct CosetClass {
    std::uint64_t fiber = 0;
    std::vector<long> k;  // smallest support element in the class
};

using CosetTable = std::map<std::vector<long>, CosetClass>;

// Central sublattice as a coset reducer on the ambient coordinates used for supports.
struct CentralFrame {
    CosetReducer reducer;
    bool refined = false;
};

CentralFrame central_frame(const TriangulationPtr& t, long n, Cell cell) {
    if (cell == Cell::reduced) {
        const BalancedLattice lat(t);
        const CentralSublattice c0 = central_sublattice(lat, n);
        return {CosetReducer(c0.definitional * lat.basis()), false};
    }
    const RefinedLattice ref(t);
    const RefinedComparison cmp = compare_refined(ref, n);
    return {CosetReducer(cmp.definitional * ref.basis()), true};
}

std::vector<long> lift(const std::vector<long>& k, bool refined) {
    std::vector<long> out(k);
    if (refined) out.push_back(0);  // supports carry no k-hat component
    return out;
}

CosetTable coset_table(const TraceSupport& s, const CentralFrame& f) {
    CosetTable out;
    for (const SupportEntry& e : s.entries) {
        const std::vector<long> k = lift(e.k, f.refined);
        CosetClass& c = out[f.reducer.reduce(k)];
        if (c.fiber == 0) c.k = k;
        c.fiber += e.fiber;
    }
    return out;
}

std::uint64_t coset_fiber(const TraceSupport& s, const CentralFrame& f, const std::vector<long>& coset) {
    std::uint64_t total = 0;
    for (const SupportEntry& e : s.entries)
        if (f.reducer.reduce(lift(e.k, f.refined)) == coset) total += e.fiber;
    return total;
}

// First class (in canonical order) with fiber 0 in `empty_side` and 1 in `single_side`.
std::optional<std::pair<std::vector<long>, CosetClass>> find_witness(const CosetTable& empty_side,
                                                                     const CosetTable& single_side) {
    for (const auto& [coset, cls] : single_side) {
        if (cls.fiber != 1) continue;
        if (empty_side.find(coset) == empty_side.end()) return std::make_pair(coset, cls);
    }
    return std::nullopt;
}

Certificate skeleton(const DetectionRequest& req, const NormalCurve& beta, const std::string& method) {
    Certificate c;
    c.method = method;
    c.n = req.n;
    c.genus = req.genus;
    c.cell = req.cell;
    c.alpha = req.alpha.coords();
    c.beta = beta.coords();
    return c;
}

void check_curve(const NormalCurve& c, const char* name) {
    if (c.is_empty()) throw std::invalid_argument(std::string(name) + " is the empty curve");
    const CurveGraph g = trace_curve(c);
    if (g.components.size() != 1 || !g.components.front().closed)
        throw std::invalid_argument(std::string(name) + " is not a connected closed curve");
}

Verification reverify(const NormalCurve& alpha, const NormalCurve& beta, const CentralFrame& f,
                      const Witness& w, const EnumerationOptions& opt) {
    Verification v;
    const bool small = static_cast<std::size_t>(alpha.total()) <= kBruteForceLimit &&
                       static_cast<std::size_t>(beta.total()) <= kBruteForceLimit;
    v.method = small ? "bruteforce" : "dp";
    auto support = [&](const NormalCurve& c) {
        if (small) {
            EnumerationOptions o;
            o.cap = kBruteForceLimit;
            return enumerate_states_bruteforce_omp(c, o);
        }
        return enumerate_admissible_states(c, opt);
    };
    v.fiber_alpha = coset_fiber(support(alpha), f, w.coset);
    v.fiber_beta = coset_fiber(support(beta), f, w.coset);
    v.ok = v.fiber_alpha == w.fiber_alpha && v.fiber_beta == w.fiber_beta;
    return v;
}

Certificate support_search(const DetectionRequest& req, const NormalCurve& beta, const std::string& method) {
    Certificate cert = skeleton(req, beta, method);
    if (req.alpha == beta) {
        cert.reasons.push_back("isotopic-curves");
        return cert;
    }
    TraceSupport sa, sb;
    try {
        sa = enumerate_admissible_states(req.alpha, req.enumeration);
        sb = enumerate_admissible_states(beta, req.enumeration);
    } catch (const CapExceeded&) {
        cert.reasons.push_back("cap-exceeded");
        return cert;
    }
    const CentralFrame frame = central_frame(req.alpha.triangulation(), req.n, req.cell);
    const CosetTable ta = coset_table(sa, frame);
    const CosetTable tb = coset_table(sb, frame);
    cert.cosets_alpha = ta.size();
    cert.cosets_beta = tb.size();

    auto found = find_witness(ta, tb);
    bool swapped = false;
    if (!found) {
        found = find_witness(tb, ta);
        swapped = found.has_value();
    }
    if (!found) {
        cert.reasons.push_back("fibers-ambiguous");
        return cert;
    }
    Witness w;
    w.coset = found->first;
    w.k = found->second.k;
    w.swapped = swapped;
    w.fiber_alpha = swapped ? 1 : 0;
    w.fiber_beta = swapped ? 0 : 1;
    cert.witness = w;
    cert.verification = reverify(req.alpha, beta, frame, w, req.enumeration);
    if (cert.verification->ok) cert.verdict = Verdict::certified_nontrivial;
    else cert.reasons.push_back("verification-failed");
    return cert;
}

}  // namespace

std::string to_string(Verdict v) {
    return v == Verdict::certified_nontrivial ? "certified-nontrivial" : "inconclusive";
}

NormalCurve resolve_beta(const DetectionRequest& req) {
    if (req.n < 3 || req.n % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
    if (req.alpha.triangulation()->genus() != req.genus)
        throw std::invalid_argument("curve triangulation genus differs from the requested genus");
    check_curve(req.alpha, "alpha");
    if (req.genus == 1 && req.alpha.triangulation() == sigma_g_star(1)) {
        const auto pq = torus_homology(req.alpha);
        if (pq[0] == 0 && pq[1] == 0) throw std::invalid_argument("alpha is not essential");
    }
    NormalCurve beta = req.alpha;
    if (req.beta) {
        if (req.beta->triangulation() != req.alpha.triangulation())
            throw std::invalid_argument("alpha and beta live on different triangulations");
        beta = *req.beta;
    } else if (req.phi) {
        beta = act_on_curve(*req.phi, req.alpha);
    } else {
        throw std::invalid_argument("request needs a mapping class or explicit beta coordinates");
    }
    check_curve(beta, "beta");
    return beta;
}

Certificate detect_edge_bound(const DetectionRequest& req) {
    const NormalCurve beta = resolve_beta(req);
    if (req.alpha == beta) {
        Certificate c = skeleton(req, beta, "edge-bound");
        c.reasons.push_back("isotopic-curves");
        return c;
    }
    if (req.alpha.max_coordinate() > req.n - 1 || beta.max_coordinate() > req.n - 1) {
        Certificate c = skeleton(req, beta, "edge-bound");
        c.reasons.push_back("bound-exceeded");
        return c;
    }
    return support_search(req, beta, "edge-bound");
}

Certificate detect_support(const DetectionRequest& req) {
    const NormalCurve beta = resolve_beta(req);
    return support_search(req, beta, req.cell == Cell::big ? "refined-support" : "support");
}

Certificate run_detection(const DetectionRequest& req) {
    if (req.cell == Cell::big) return detect_support(req);
    Certificate c = detect_edge_bound(req);
    if (c.verdict == Verdict::certified_nontrivial) return c;
    const bool bound = std::find(c.reasons.begin(), c.reasons.end(), "bound-exceeded") != c.reasons.end();
    if (!bound) return c;
    Certificate s = detect_support(req);
    s.reasons.insert(s.reasons.begin(), "bound-exceeded");
    return s;
}

ReducedCharacterSpace reduced_character_space(const SL2Rep& rho, long n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
    const SL2Mat mu = moment_map(rho);
    if (classify_cell(mu) != Cell::reduced) throw std::invalid_argument("representation is not in the reduced cell");
    // mu = [[0, -z^-N], [z^N, d]], so the lifts are the N-th roots of mu_21.
    const Cyclotomic& c = mu.c();
    auto [k, sign] = c.as_signed_root();
    if (k < 0) throw std::invalid_argument("lower-left entry of mu is not a root of unity");
    long m = c.order();
    if (sign < 0) {
        if (m % 2 == 1) {
            k = 2 * k + m;
            m *= 2;
        } else {
            k += m / 2;
        }
    }
    ReducedCharacterSpace out{mu, static_cast<int>(n * m), {}};
    for (long j = 0; j < n; ++j) out.lifts.push_back(Cyclotomic::zeta(out.field_order, k + j * m));
    return out;
}

}  // namespace skeinlab
