#pragma once

#include "skeinlab/mapping_class.hpp"
#include "skeinlab/normal_curve.hpp"
#include "skeinlab/sl2.hpp"
#include "skeinlab/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skeinlab {

struct DetectionRequest {
    explicit DetectionRequest(NormalCurve a) : alpha(std::move(a)) {}

    int genus = 1;
    long n = 5;
    Cell cell = Cell::reduced;
    NormalCurve alpha;
    std::optional<MappingClass> phi;
    std::optional<NormalCurve> beta;  // required when phi cannot be applied to curves
    EnumerationOptions enumeration;
};

// Checks the request invariants and returns beta = phi(alpha).
NormalCurve resolve_beta(const DetectionRequest& req);

enum class Verdict { certified_nontrivial, inconclusive };
std::string to_string(Verdict v);

struct Witness {
    std::vector<long> k;      // ambient balanced map (with the k-hat slot for the big cell)
    std::vector<long> coset;  // canonical representative of k modulo the central sublattice
    std::uint64_t fiber_alpha = 0;
    std::uint64_t fiber_beta = 0;
    bool swapped = false;     // roles exchanged: alpha carries the singleton fiber
};

struct Verification {
    std::string method;  // "bruteforce" or "dp"
    std::uint64_t fiber_alpha = 0;
    std::uint64_t fiber_beta = 0;
    bool ok = false;
};

struct Certificate {
    Verdict verdict = Verdict::inconclusive;
    std::string method;  // "edge-bound", "support", "refined-support"
    long n = 0;
    int genus = 1;
    Cell cell = Cell::reduced;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::optional<Witness> witness;
    std::optional<Verification> verification;
    std::vector<std::string> reasons;  // isotopic-curves, cap-exceeded, fibers-ambiguous, bound-exceeded
    std::vector<std::string> assumptions{"delta-liftable"};
    std::size_t cosets_alpha = 0;
    std::size_t cosets_beta = 0;
};

// Sufficient condition: distinct curves meeting each edge at most N-1 times.
Certificate detect_edge_bound(const DetectionRequest& req);

// Coset search for a class with an empty fiber on one side and a singleton on the other.
Certificate detect_support(const DetectionRequest& req);

// detect_edge_bound, falling through to detect_support when the bound fails.
Certificate run_detection(const DetectionRequest& req);

struct ReducedCharacterSpace {
    SL2Mat mu;
    int field_order = 0;           // lifts live in Q(zeta_field_order)
    std::vector<Cyclotomic> lifts;  // the N solutions z of z^N = mu_21
};

// Throws std::invalid_argument for big-cell points or when mu_21 is not a
// root of unity (no lift inside a cyclotomic field).
ReducedCharacterSpace reduced_character_space(const SL2Rep& rho, long n);

}  // namespace skeinlab
