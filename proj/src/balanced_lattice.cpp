#include "skeinlab/balanced_lattice.hpp"

#include <stdexcept>

namespace skeinlab {

namespace {

// Nullspace of a 0/1 matrix over GF(2), one vector per free column.
std::vector<std::vector<int>> gf2_nullspace(std::vector<std::vector<int>> a, std::size_t ncols) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c])
                for (std::size_t j = 0; j < ncols; ++j) a[i][j] ^= a[r][j];
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int>> out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(ncols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (a[i][free]) v[pivot_col[i]] = 1;
        out.push_back(v);
    }
    return out;
}

IntMatrix pullback(const IntMatrix& basis, const IntMatrix& w) { return basis * w * basis.transpose(); }

Integer power(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

}  // namespace

BalancedLattice::BalancedLattice(TriangulationPtr t) : tri_(std::move(t)) {
    const std::size_t ne = tri_->num_edges();
    std::vector<std::vector<int>> face_rows;
    for (const auto& f : tri_->faces()) {
        std::vector<int> row(ne, 0);
        for (int e : f) row[e] ^= 1;
        face_rows.push_back(row);
    }
    IntMatrix gens(0, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        std::vector<Integer> v(ne, 0);
        v[e] = 2;
        gens.append_row(v);
    }
    for (const auto& v : gf2_nullspace(face_rows, ne)) {
        std::vector<Integer> row(v.begin(), v.end());
        gens.append_row(row);
    }
    basis_ = hermite_normal_form(gens);
    if (basis_.rows() != ne) throw std::logic_error("balanced lattice must have full rank");
    wp_ = wp_form(*tri_);
    form_ = pullback(basis_, wp_);
}

SkewLattice BalancedLattice::skew_lattice() const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rank(); ++i) labels.push_back("k" + std::to_string(i));
    return SkewLattice("K(" + tri_->id() + ")", labels, form_);
}

bool BalancedLattice::is_balanced(const std::vector<long>& k) const {
    if (k.size() != tri_->num_edges()) return false;
    for (const auto& f : tri_->faces())
        if ((k[f[0]] + k[f[1]] + k[f[2]]) % 2 != 0) return false;
    return true;
}

std::optional<std::vector<Integer>> BalancedLattice::coordinates(const std::vector<Integer>& ambient) const {
    return coordinates_in(basis_, ambient);
}

std::vector<Integer> BalancedLattice::boundary_vector() const {
    return std::vector<Integer>(tri_->num_edges(), 2);
}

BalancedLattice balanced_lattice(TriangulationPtr t) { return BalancedLattice(std::move(t)); }

CentralSublattice central_sublattice(const BalancedLattice& b, long n) {
    CentralSublattice out;
    const std::size_t r = b.rank();
    out.definitional = form_kernel_mod(b.form(), n);
    IntMatrix gens(0, r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Integer> v(r, 0);
        v[i] = n;
        gens.append_row(v);
    }
    auto kb = b.coordinates(b.boundary_vector());
    if (!kb) throw std::logic_error("k_boundary is not balanced");
    gens.append_row(*kb);
    out.formula = hermite_normal_form(gens);
    out.equal = out.definitional == out.formula;
    out.index = sublattice_index(IntMatrix::identity(r), out.definitional).index;
    return out;
}

PiDegreeReport pi_degree(const SkewLattice& l, long n) {
    PiDegreeReport rep;
    IndexResult idx = sublattice_index(IntMatrix::identity(l.rank()), form_kernel_mod(l, n));
    rep.index = idx.index;
    rep.perfect_square = mpz_perfect_square_p(rep.index.get_mpz_t()) != 0;
    if (rep.perfect_square) {
        mpz_sqrt(rep.pi_degree.get_mpz_t(), rep.index.get_mpz_t());
        rep.note = "index is a perfect square";
    } else {
        rep.pi_degree = 0;
        rep.note = "index " + rep.index.get_str() + " is not a perfect square; PI-degree convention mismatch";
    }
    return rep;
}

PiDegreeReport pi_degree(const BalancedLattice& b, long n) { return pi_degree(b.skew_lattice(), n); }

RefinedLattice::RefinedLattice(TriangulationPtr t) : base_(t) {
    const auto bnd = t->boundary_edges();
    if (bnd.size() != 1) throw std::invalid_argument("refined lattice needs exactly one boundary arc");
    boundary_edge_ = bnd.front();
    const int ne = static_cast<int>(t->num_edges());
    hat_edge_ = ne;
    prime_edge_ = ne;
    second_edge_ = ne + 1;
    auto faces = t->faces();
    faces.push_back({boundary_edge_, prime_edge_, second_edge_});
    star_ = std::make_shared<Triangulation>(t->id() + "*", std::move(faces), t->genus());
    const std::string err = star_->validation_error(false);
    if (!err.empty()) throw std::logic_error("extended triangulation invalid: " + err);

    const IntMatrix& kb = base_.basis();
    basis_ = IntMatrix(0, ne + 1);
    for (std::size_t i = 0; i < kb.rows(); ++i) {
        auto row = kb.row(i);
        row.push_back(0);
        basis_.append_row(row);
    }
    std::vector<Integer> hat(ne + 1, 0);
    hat[ne] = 2;  // i(k-hat) must be balanced on the new face
    basis_.append_row(hat);

    embedding_ = IntMatrix(0, ne + 2);
    for (std::size_t i = 0; i < basis_.rows(); ++i) embedding_.append_row(embed(basis_.row(i)));
    form_ = pullback(embedding_, wp_form(*star_));
    if (!form_.is_skew_symmetric()) throw std::logic_error("refined form is not skew-symmetric");
}

std::vector<Integer> RefinedLattice::embed(const std::vector<Integer>& x) const {
    const std::size_t ne = base_.triangulation()->num_edges();
    if (x.size() != ne + 1) throw std::invalid_argument("refined vector has wrong length");
    std::vector<Integer> out(ne + 2, 0);
    for (std::size_t e = 0; e < ne; ++e) out[e] = x[e];
    out[boundary_edge_] = x[boundary_edge_] + x[ne];
    out[prime_edge_] = -x[boundary_edge_];
    out[second_edge_] = 0;
    return out;
}

SkewLattice RefinedLattice::skew_lattice() const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < rank(); ++i) labels.push_back("k" + std::to_string(i));
    labels.push_back("khat");
    return SkewLattice("Kbar(" + base_.triangulation()->id() + ")", labels, form_);
}

RefinedComparison compare_refined(const RefinedLattice& r, long n) {
    RefinedComparison out;
    out.n = n;
    const std::size_t rk = r.rank();
    out.definitional = form_kernel_mod(r.form(), n);

    CentralSublattice k0 = central_sublattice(r.base(), n);
    IntMatrix gens(0, rk);
    for (std::size_t i = 0; i < k0.formula.rows(); ++i) {
        auto row = k0.formula.row(i);
        row.push_back(0);
        gens.append_row(row);
    }
    std::vector<Integer> hat(rk, 0);
    hat[rk - 1] = n;
    gens.append_row(hat);
    out.formula = hermite_normal_form(gens);
    out.kernels_equal = out.definitional == out.formula;

    out.degree = pi_degree(r.skew_lattice(), n);
    out.expected_index = power(n, 6UL * r.base().triangulation()->genus());
    out.index_matches_expected = out.degree.index == out.expected_index;

    // Closed form: (k1,k2)^WP + n1 k1(a_b) - n2 k2(a_b) with x = k + n k-hat.
    const IntMatrix& b = r.basis();
    const IntMatrix& w = r.base().ambient_form();
    const std::size_t ne = w.rows();
    const int ab = r.boundary_edge();
    out.closed_form_pairing = IntMatrix(rk, rk);
    for (std::size_t i = 0; i < rk; ++i) {
        auto xi = b.row(i);
        Integer ni = xi[ne] / 2;
        xi.resize(ne);
        for (std::size_t j = 0; j < rk; ++j) {
            auto xj = b.row(j);
            Integer nj = xj[ne] / 2;
            xj.resize(ne);
            Integer v = bilinear(w, xi, xj) + ni * xi[ab] - nj * xj[ab];
            out.closed_form_pairing(i, j) = v;
            ++out.pairing_checks;
            if (v != r.form()(i, j)) ++out.pairing_mismatches;
        }
    }
    return out;
}

}  // namespace skeinlab
