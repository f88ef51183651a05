#include "skeinlab/lattice.hpp"

#include <stdexcept>

namespace skeinlab {

std::vector<Integer> SmithResult::diagonal() const {
    std::vector<Integer> out;
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) return res;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = floor_div(a(i, t), a(t, t));
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = floor_div(a(t, j), a(t, t));
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Enforce the divisibility chain.
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad != r) {
                a.add_row_multiple(t, bad, 1);
                u.add_row_multiple(t, bad, 1);
                continue;
            }
            if (a(t, t) < 0) {
                a.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    return res;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        for (;;) {
            std::size_t best = nr;
            for (std::size_t i = r; i < nr; ++i)
                if (a(i, c) != 0 && (best == nr || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == nr) break;
            a.swap_rows(r, best);
            bool others = false;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (a(i, c) == 0) continue;
                a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
                if (a(i, c) != 0) others = true;
            }
            if (!others) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
        ++r;
    }
    IntMatrix out(r, nc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(i, j);
    return out;
}

std::optional<std::vector<Integer>> coordinates_in(const IntMatrix& hnf_rows, const std::vector<Integer>& v) {
    if (v.size() != hnf_rows.cols()) throw std::invalid_argument("vector length mismatch");
    std::vector<Integer> rest = v;
    std::vector<Integer> coords(hnf_rows.rows(), 0);
    for (std::size_t k = 0; k < hnf_rows.rows(); ++k) {
        std::size_t p = 0;
        while (p < hnf_rows.cols() && hnf_rows(k, p) == 0) ++p;
        if (p == hnf_rows.cols()) continue;
        for (std::size_t j = 0; j < p; ++j)
            if (rest[j] != 0) return std::nullopt;
        if (rest[p] % hnf_rows(k, p) != 0) return std::nullopt;
        Integer c = rest[p] / hnf_rows(k, p);
        coords[k] = c;
        for (std::size_t j = p; j < rest.size(); ++j) rest[j] -= c * hnf_rows(k, j);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

SkewLattice::SkewLattice(std::string id_, std::vector<std::string> labels_, IntMatrix form_)
    : id(std::move(id_)), labels(std::move(labels_)), form(std::move(form_)) {
    if (!form.is_skew_symmetric()) throw std::invalid_argument("lattice form is not skew-symmetric");
    if (labels.size() != form.rows()) throw std::invalid_argument("label count does not match rank");
}

IntMatrix form_kernel_mod(const IntMatrix& form, long n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    const std::size_t k = form.cols();
    if (n == 1) return IntMatrix::identity(k);
    // W = U^-1 D V^-1, so W x = 0 mod n iff D (V^-1 x) = 0 mod n.
    SmithResult s = smith_normal_form(form);
    const Integer nn(n);
    IntMatrix gens(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        Integer di = i < std::min(form.rows(), k) ? s.d(i, i) : Integer(0);
        Integer factor = nn / gcd(nn, di);
        for (std::size_t j = 0; j < k; ++j) gens(i, j) = s.v(j, i) * factor;
    }
    return hermite_normal_form(gens);
}

IndexResult sublattice_index(const IntMatrix& l_rows, const IntMatrix& s_rows) {
    IntMatrix l = hermite_normal_form(l_rows);
    IntMatrix coords(s_rows.rows(), l.rows());
    for (std::size_t i = 0; i < s_rows.rows(); ++i) {
        auto c = coordinates_in(l, s_rows.row(i));
        if (!c) throw std::invalid_argument("sublattice is not contained in lattice");
        for (std::size_t j = 0; j < l.rows(); ++j) coords(i, j) = (*c)[j];
    }
    IndexResult out;
    if (l.rows() == 0) return out;
    SmithResult s = smith_normal_form(coords);
    for (std::size_t i = 0; i < l.rows(); ++i) {
        if (i >= s.d.rows() || s.d(i, i) == 0) {
            out.finite = false;
            out.index = 0;
            return out;
        }
        out.index *= s.d(i, i);
    }
    return out;
}

namespace {

// Congruence bookkeeping: basis rows P, gram G = P W P^T, and P^-1.
struct Congruence {
    IntMatrix p, pinv, g;

    void add(std::size_t i, std::size_t j, const Integer& c) {  // v_i += c v_j
        if (c == 0) return;
        p.add_row_multiple(i, j, c);
        g.add_row_multiple(i, j, c);
        g.add_col_multiple(i, j, c);
        pinv.add_col_multiple(j, i, -c);
    }
    void swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        p.swap_rows(i, j);
        g.swap_rows(i, j);
        g.swap_cols(i, j);
        pinv.swap_cols(i, j);
    }
};

}  // namespace

SymplecticBasis skew_normal_form(const IntMatrix& form) {
    if (!form.is_skew_symmetric()) throw std::invalid_argument("skew_normal_form needs a skew-symmetric matrix");
    const std::size_t n = form.rows();
    Congruence st{IntMatrix::identity(n), IntMatrix::identity(n), form};
    SymplecticBasis out;
    std::size_t t = 0;
    while (t + 1 < n) {
        std::size_t bi = n, bj = n;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (st.g(i, j) != 0 && (bi == n || abs(st.g(i, j)) < abs(st.g(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == n) break;
        st.swap(t, bi);
        st.swap(t + 1, bj == t ? bi : bj);
        if (st.g(t, t + 1) < 0) st.swap(t, t + 1);
        const Integer d = st.g(t, t + 1);
        bool clean = true;
        for (std::size_t k = t + 2; k < n; ++k) {
            // (v_t, v_k) shifts by c*d under v_k += c v_{t+1}; (v_{t+1}, v_k) by -c*d under v_k += c v_t.
            st.add(k, t + 1, -floor_div(st.g(t, k), d));
            st.add(k, t, floor_div(st.g(t + 1, k), d));
            if (st.g(t, k) != 0 || st.g(t + 1, k) != 0) clean = false;
        }
        if (!clean) continue;
        out.d.push_back(d);
        t += 2;
    }
    out.p = std::move(st.p);
    out.p_inverse = std::move(st.pinv);
    out.gram = std::move(st.g);
    return out;
}

CosetReducer::CosetReducer(const IntMatrix& sublattice_rows) {
    hnf_ = hermite_normal_form(sublattice_rows);
    const std::size_t n = hnf_.cols();
    if (hnf_.rows() != n) throw std::invalid_argument("coset reducer needs a full-rank sublattice");
    for (std::size_t k = 0; k < n; ++k) {
        if (hnf_(k, k) == 0) throw std::logic_error("full-rank HNF must have diagonal pivots");
        rows_.push_back(hnf_.row_long(k));
        pivots_.push_back(rows_.back()[k]);
    }
}

std::vector<long> CosetReducer::reduce(std::vector<long> v) const {
    if (v.size() != rows_.size()) throw std::invalid_argument("vector length mismatch in coset reduction");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        long q = v[k] / pivots_[k];
        if (v[k] % pivots_[k] != 0 && v[k] < 0) --q;
        if (q == 0) continue;
        for (std::size_t j = k; j < v.size(); ++j) v[j] -= q * rows_[k][j];
    }
    return v;
}

bool CosetReducer::contains(const std::vector<long>& v) const {
    for (long x : reduce(v))
        if (x != 0) return false;
    return true;
}

}  // namespace skeinlab
