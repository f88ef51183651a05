#pragma once

#include "skeinlab/lattice.hpp"
#include "skeinlab/triangulation.hpp"

#include <optional>

namespace skeinlab {

class BalancedLattice {
public:
    explicit BalancedLattice(TriangulationPtr t);

    const TriangulationPtr& triangulation() const { return tri_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }  // rows in Z^E
    const IntMatrix& ambient_form() const { return wp_; }
    const IntMatrix& form() const { return form_; }
    SkewLattice skew_lattice() const;

    bool is_balanced(const std::vector<long>& k) const;
    // Coordinates of an ambient balanced vector in the HNF basis.
    std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& ambient) const;
    std::vector<Integer> ambient(const std::vector<Integer>& coords) const { return basis_.left_apply(coords); }

    std::vector<Integer> boundary_vector() const;  // k_boundary: every edge -> 2

private:
    TriangulationPtr tri_;
    IntMatrix basis_;
    IntMatrix wp_;
    IntMatrix form_;
};

BalancedLattice balanced_lattice(TriangulationPtr t);

struct CentralSublattice {
    IntMatrix definitional;  // HNF rows, lattice coordinates
    IntMatrix formula;       // HNF of N K + Z k_boundary, lattice coordinates
    bool equal = false;
    Integer index;           // [K : K0] from the definitional kernel
};

CentralSublattice central_sublattice(const BalancedLattice& b, long n);

struct PiDegreeReport {
    Integer index;
    bool perfect_square = false;
    Integer pi_degree;  // valid only when perfect_square
    std::string note;
};

PiDegreeReport pi_degree(const SkewLattice& l, long n);
PiDegreeReport pi_degree(const BalancedLattice& b, long n);

// K-bar = K + Z k-hat with the form pulled back from the triangulation that
// glues an extra triangle (a_b, a', a'') along the boundary arc.
class RefinedLattice {
public:
    explicit RefinedLattice(TriangulationPtr t);

    const BalancedLattice& base() const { return base_; }
    const TriangulationPtr& extended() const { return star_; }
    int boundary_edge() const { return boundary_edge_; }
    int hat_edge() const { return hat_edge_; }        // ambient index of k-hat
    int prime_edge() const { return prime_edge_; }    // a' in the extended triangulation
    int second_edge() const { return second_edge_; }  // a'' in the extended triangulation

    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }          // rows in Z^{E + 1}
    const IntMatrix& embedding() const { return embedding_; }  // rows: images of the basis in Z^{E*}
    const IntMatrix& form() const { return form_; }
    SkewLattice skew_lattice() const;

    // i(k, n) as an ambient vector of the extended triangulation.
    std::vector<Integer> embed(const std::vector<Integer>& ambient_with_hat) const;

private:
    BalancedLattice base_;
    TriangulationPtr star_;
    int boundary_edge_ = -1;
    int hat_edge_ = -1;
    int prime_edge_ = -1;
    int second_edge_ = -1;
    IntMatrix basis_;
    IntMatrix embedding_;
    IntMatrix form_;
};

struct RefinedComparison {
    long n = 0;
    IntMatrix definitional;  // HNF of the mod-N kernel, K-bar coordinates
    IntMatrix formula;       // HNF of K0 + N Z k-hat, K-bar coordinates
    bool kernels_equal = false;
    PiDegreeReport degree;
    Integer expected_index;  // N^{6g}
    bool index_matches_expected = false;
    // Basis pairs where the closed-form pairing differs from the computed one.
    std::size_t pairing_mismatches = 0;
    std::size_t pairing_checks = 0;
    IntMatrix closed_form_pairing;
};

RefinedComparison compare_refined(const RefinedLattice& r, long n);

}  // namespace skeinlab
