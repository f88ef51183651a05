#pragma once

#include "skeinlab/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skeinlab {

struct SmithResult {
    IntMatrix d;  // D = U * M * V
    IntMatrix u;
    IntMatrix v;
    std::vector<Integer> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Row-style HNF of the lattice spanned by the rows of m: nonzero rows only,
// echelon with positive pivots and entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

// Integer coordinates of v in the row lattice of an echelon basis (HNF rows);
// nullopt if v is not in the lattice.
std::optional<std::vector<Integer>> coordinates_in(const IntMatrix& hnf_rows, const std::vector<Integer>& v);

// Free Z-module with a skew-symmetric integer pairing.
struct SkewLattice {
    std::string id;
    std::vector<std::string> labels;
    IntMatrix form;

    SkewLattice() = default;
    SkewLattice(std::string id, std::vector<std::string> labels, IntMatrix form);
    std::size_t rank() const { return form.rows(); }
    Integer pairing(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
        return bilinear(form, x, y);
    }
};

// HNF basis (lattice coordinates) of {a : form(a, .) = 0 mod n}.
IntMatrix form_kernel_mod(const IntMatrix& form, long n);
inline IntMatrix form_kernel_mod(const SkewLattice& l, long n) { return form_kernel_mod(l.form, n); }

struct IndexResult {
    bool finite = true;
    Integer index = 1;
};

// [L : S] for row bases given in a common ambient coordinate system.
// Throws std::invalid_argument if S is not contained in L.
IndexResult sublattice_index(const IntMatrix& l_rows, const IntMatrix& s_rows);

// Unimodular P with P * form * P^T block diagonal: blocks d_i * [[0,1],[-1,0]]
// (d_i > 0) followed by zeros.
struct SymplecticBasis {
    IntMatrix p;
    IntMatrix p_inverse;
    IntMatrix gram;  // P * form * P^T
    std::vector<Integer> d;
    std::size_t radical_start() const { return 2 * d.size(); }
};

SymplecticBasis skew_normal_form(const IntMatrix& form);

// Canonical coset representatives modulo a full-rank sublattice of Z^n.
class CosetReducer {
public:
    CosetReducer() = default;
    explicit CosetReducer(const IntMatrix& sublattice_rows);
    std::vector<long> reduce(std::vector<long> v) const;
    bool contains(const std::vector<long>& v) const;
    std::size_t dimension() const { return pivots_.size(); }
    const IntMatrix& hnf() const { return hnf_; }

private:
    IntMatrix hnf_;
    std::vector<std::vector<long>> rows_;
    std::vector<long> pivots_;
};

}  // namespace skeinlab
