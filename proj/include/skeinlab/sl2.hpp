#pragma once

#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/mapping_class.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab {

// 2x2 matrix of determinant one over Q(zeta_m).
class SL2Mat {
public:
    // Throws std::invalid_argument unless ad - bc = 1.
    SL2Mat(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d);
    static SL2Mat identity(int order);

    const Cyclotomic& a() const { return a_; }
    const Cyclotomic& b() const { return b_; }
    const Cyclotomic& c() const { return c_; }
    const Cyclotomic& d() const { return d_; }
    int order() const { return a_.order(); }

    Cyclotomic trace() const { return a_ + d_; }
    SL2Mat inverse() const;
    SL2Mat embed(int target) const;
    bool is_central() const;  // +-I

    friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
    friend bool operator==(const SL2Mat& x, const SL2Mat& y);
    friend bool operator!=(const SL2Mat& x, const SL2Mat& y) { return !(x == y); }

    // Canonical serialization, also used as a total order for deduplication.
    std::string key() const;

private:
    struct Unchecked {};
    SL2Mat(Unchecked, Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d);

    Cyclotomic a_, b_, c_, d_;
};

// Point of Hom(pi_1, SL2) for the free group on a1, b1, ..., ag, bg.
struct SL2Rep {
    int genus = 1;
    std::vector<SL2Mat> images;  // A1, B1, ..., Ag, Bg

    SL2Rep(int g, std::vector<SL2Mat> imgs);
    static SL2Rep trivial(int g, int order);

    int order() const { return images.front().order(); }
    std::string key() const;
    friend bool operator==(const SL2Rep& x, const SL2Rep& y) { return x.images == y.images; }
};

SL2Mat evaluate_word(const SL2Rep& rho, const FreeWord& w);

// (phi . rho)(gamma) = rho(phi(gamma)).
SL2Rep act(const FreeGroupEndomorphism& phi, const SL2Rep& rho);

// rho([a1,b1]...[ag,bg]).
SL2Mat moment_map(const SL2Rep& rho);

enum class Cell { big, reduced };
std::string to_string(Cell c);

inline int cell_index(const SL2Mat& m) { return m.a().is_zero() ? 1 : 0; }
inline Cell classify_cell(const SL2Mat& m) { return m.a().is_zero() ? Cell::reduced : Cell::big; }
inline Cell classify_cell(const SL2Rep& rho) { return classify_cell(moment_map(rho)); }

enum class ConjugacyKind { central_plus, central_minus, parabolic_plus, parabolic_minus, semisimple };
std::string to_string(ConjugacyKind k);

struct LeafDescriptor {
    int cell = 0;
    Cyclotomic trace;
    ConjugacyKind kind = ConjugacyKind::semisimple;
    // Cell 1 leaves are singletons inside the dressing orbit C_b.
    std::optional<Cyclotomic> dressing_b;
};

LeafDescriptor classify_sts_leaf(const SL2Mat& m);

// (i, j) with g2^-1 g1 in cell i and g2 g1^-1 in cell j.
std::pair<int, int> classify_double_leaf(const SL2Mat& g1, const SL2Mat& g2);

// [[a, z^2 b], [z^-2 c, d]]; z and m are moved to a common cyclotomic field.
SL2Mat toric_action(const Cyclotomic& z, const SL2Mat& m);

class CapError : public std::runtime_error {
public:
    CapError(const std::string& what, std::size_t cap) : std::runtime_error(what), cap(cap) {}
    std::size_t cap;
};

// Subgroup generated by gens, sorted by key(). Throws CapError past cap elements.
std::vector<SL2Mat> group_closure(const std::vector<SL2Mat>& gens, std::size_t cap = 10000);

// Every tuple of group elements; Hom(pi_1, H) = H^{2g} since pi_1 is free.
std::vector<SL2Rep> enumerate_hom_to_finite(const std::vector<SL2Mat>& group, int genus,
                                            std::size_t limit = 1000000);

struct OrbitData {
    std::vector<FreeGroupEndomorphism> generators;
    std::vector<SL2Rep> points;  // BFS discovery order from the seeds
    SL2Mat mu;
    Cell cell;
};

// Closure of seeds under the generators. Throws CapError when more than cap
// points are found and std::runtime_error if the moment map varies.
OrbitData orbit_closure(const std::vector<SL2Rep>& seeds, const std::vector<FreeGroupEndomorphism>& gens,
                        std::size_t cap);

Integer rep_dimension(Cell cell, int genus, std::size_t orbit_size, long n);
inline Integer rep_dimension(const OrbitData& o, long n) {
    return rep_dimension(o.cell, o.points.front().genus, o.points.size(), n);
}

// Generators of the quaternion group inside SL2(Q(zeta_4)).
std::vector<SL2Mat> quaternion_generators();

}  // namespace skeinlab
