#include "skeinlab/qtorus.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace skeinlab {

QuantumTorus::QuantumTorus(SkewLattice lattice, long n) : lattice_(std::move(lattice)), n_(n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("quantum torus needs an odd root order");
    h_ = (n + 1) / 2;
    center_ = form_kernel_mod(lattice_, n);
}

long QuantumTorus::pairing(const LatticeVector& a, const LatticeVector& b) const {
    if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("lattice vector has wrong rank");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            s += a[i] * lattice_.form(i, j).get_si() * b[j];
        }
    }
    return s;
}

long QuantumTorus::twist(const LatticeVector& a, const LatticeVector& b) const {
    const long w = mod_floor(pairing(a, b), n_);
    return mod_floor(-w * ((h_ * h_) % n_), n_);
}

Cyclotomic QuantumTorus::commutation_factor(long w) const {
    return Cyclotomic::zeta(static_cast<int>(n_), mod_floor(-mod_floor(w, n_) * h_, n_));
}

TorusElement TorusElement::monomial(QuantumTorusPtr t, const LatticeVector& a) {
    if (a.size() != t->rank()) throw std::invalid_argument("lattice vector has wrong rank");
    TorusElement x(t);
    x.terms_.emplace(a, Cyclotomic::one(static_cast<int>(t->n())));
    return x;
}

TorusElement TorusElement::constant(QuantumTorusPtr t, const Cyclotomic& c) {
    TorusElement x(t);
    x.add_term(LatticeVector(t->rank(), 0), c);
    return x;
}

void TorusElement::check_same(const TorusElement& o) const {
    if (torus_ != o.torus_) throw std::invalid_argument("torus elements from different lattices");
}

void TorusElement::add_term(const LatticeVector& a, const Cyclotomic& c) {
    if (a.size() != torus_->rank()) throw std::invalid_argument("lattice vector has wrong rank");
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
    x.check_same(y);
    TorusElement out(x.torus_);
    const QuantumTorus& t = *x.torus_;
    for (const auto& [a, ca] : x.terms_)
        for (const auto& [b, cb] : y.terms_) {
            LatticeVector s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            out.add_term(s, (ca * cb).times_zeta(t.twist(a, b)));
        }
    return out;
}

TorusElement TorusElement::scaled(const Cyclotomic& c) const {
    TorusElement out(torus_);
    for (const auto& [a, x] : terms_) out.add_term(a, x * c);
    return out;
}

TorusElement TorusElement::pow(unsigned long e) const {
    TorusElement result = constant(torus_, Cyclotomic::one(static_cast<int>(torus_->n())));
    TorusElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.torus_ == b.torus_ && a.terms_ == b.terms_;
}

TorusElement frobenius(const TorusElement& x) {
    const long n = x.torus()->n();
    TorusElement out(x.torus());
    for (const auto& [a, c] : x.terms()) {
        if (!c.is_rational()) throw std::invalid_argument("frobenius needs rational coefficients");
        LatticeVector s(a);
        for (auto& v : s) v *= n;
        out.add_term(s, c);
    }
    return out;
}

TorusElement chebyshev_apply(const TorusElement& x, long degree) {
    if (degree < 0) throw std::invalid_argument("Chebyshev degree must be nonnegative");
    const int order = static_cast<int>(x.torus()->n());
    TorusElement prev = TorusElement::constant(x.torus(), Cyclotomic(order, Rational(2)));
    if (degree == 0) return prev;
    TorusElement cur = x;
    for (long k = 1; k < degree; ++k) {
        TorusElement next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool is_central(const TorusElement& x) {
    const QuantumTorus& t = *x.torus();
    for (const auto& [a, c] : x.terms())
        if (!coordinates_in(t.center_basis(), to_integer_vector(a))) return false;
    return true;
}

Cyclotomic CentralCharacter::evaluate(const LatticeVector& v) const {
    auto coords = coordinates_in(kernel_basis, to_integer_vector(v));
    if (!coords) throw std::invalid_argument("vector is outside the character's domain");
    Cyclotomic out = Cyclotomic::one(values.front().order());
    for (std::size_t k = 0; k < coords->size(); ++k) {
        const long e = (*coords)[k].get_si();
        if (e != 0) out *= values[k].pow(e);
    }
    return out;
}

CentralCharacter trivial_character(const QuantumTorus& t) {
    CentralCharacter chi;
    chi.kernel_basis = t.center_basis();
    chi.values.assign(chi.kernel_basis.rows(), Cyclotomic::one(static_cast<int>(t.n())));
    return chi;
}

CentralCharacter make_character(const QuantumTorus& t, std::vector<Cyclotomic> basis_values,
                                const std::vector<std::pair<LatticeVector, Cyclotomic>>& extra) {
    CentralCharacter chi;
    chi.kernel_basis = t.center_basis();
    if (basis_values.size() != chi.kernel_basis.rows())
        throw std::invalid_argument("character needs one value per kernel basis vector");
    for (const auto& v : basis_values)
        if (v.is_zero()) throw std::invalid_argument("character values must be nonzero");
    chi.values = std::move(basis_values);
    for (const auto& [v, value] : extra)
        if (chi.evaluate(v) != value) throw std::invalid_argument("character is not multiplicative");
    return chi;
}

namespace {

std::optional<Cyclotomic> nth_root(const Cyclotomic& c, long n, int order) {
    const Cyclotomic target = c.embed(order);
    if (c.is_rational()) {
        Rational q = c.rational_value();
        Integer num = q.get_num(), den = q.get_den(), rn, rd;
        const bool neg = num < 0;
        if (neg) num = -num;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) && mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n))
            return Cyclotomic(order, Rational(neg ? -rn : rn, rd));  // n is odd
    }
    for (long j = 0; j < order; ++j)
        for (int sign : {1, -1}) {
            Cyclotomic cand = Cyclotomic::zeta(order, j) * Rational(sign);
            if (cand.pow(n) == target) return cand;
        }
    return std::nullopt;
}

// Places a factor matrix on tensor slot `slot` of a product of cyclic factors.
CycloMatrix on_slot(const CycloMatrix& x, const std::vector<std::size_t>& dims, std::size_t slot) {
    std::size_t total = 1, stride = 1;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        total *= dims[s];
        if (s > slot) stride *= dims[s];
    }
    CycloMatrix m(total, total, x.order());
    for (std::size_t row = 0; row < total; ++row) {
        const std::size_t digit = (row / stride) % dims[slot];
        const std::size_t base = row - digit * stride;
        for (std::size_t j = 0; j < dims[slot]; ++j)
            if (!x(digit, j).is_zero()) m(row, base + j * stride) = x(digit, j);
    }
    return m;
}

struct Block {
    long n = 1;
    LatticeVector f, g;
};

}  // namespace

TorusIrrep build_irrep(const QuantumTorus& t, const CentralCharacter& chi) {
    if (chi.kernel_basis != t.center_basis()) throw std::invalid_argument("character is not defined on E0");
    if (chi.values.size() != chi.kernel_basis.rows()) throw std::invalid_argument("character value count mismatch");
    const long n = t.n();
    const std::size_t r = t.rank();
    const SymplecticBasis sb = skew_normal_form(t.lattice().form);

    std::vector<Block> blocks;
    std::vector<std::size_t> dims;
    std::size_t dimension = 1;
    for (std::size_t b = 0; b < sb.d.size(); ++b) {
        Block blk;
        blk.n = n / gcd(Integer(n), sb.d[b]).get_si();
        blk.f = sb.p.row_long(2 * b);
        blk.g = sb.p.row_long(2 * b + 1);
        if (blk.n > 1) {
            dims.push_back(static_cast<std::size_t>(blk.n));
            dimension *= static_cast<std::size_t>(blk.n);
            if (dimension > kMaxIrrepDimension)
                throw std::length_error("irrep dimension exceeds cap of " + std::to_string(kMaxIrrepDimension));
        }
        blocks.push_back(blk);
    }
    const Integer index = sublattice_index(IntMatrix::identity(r), t.center_basis()).index;
    if (Integer(dimension) * Integer(dimension) != index)
        throw std::logic_error("index " + index.get_str() + " is not the square of the irrep dimension");

    auto scaled_vec = [](LatticeVector v, long s) {
        for (auto& x : v) x *= s;
        return v;
    };

    long lcm_n = 1;
    for (const auto& blk : blocks) lcm_n = std::lcm(lcm_n, blk.n);

    for (int order : {static_cast<int>(n), static_cast<int>(n * lcm_n)}) {
        std::vector<CycloMatrix> adapted(r);
        bool ok = true;
        std::size_t slot = 0;
        const CycloMatrix id = CycloMatrix::identity(std::max<std::size_t>(dimension, 1), order);
        for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
            const Block& blk = blocks[b];
            if (blk.n == 1) {
                adapted[2 * b] = id * chi.evaluate(blk.f).embed(order);
                adapted[2 * b + 1] = id * chi.evaluate(blk.g).embed(order);
                continue;
            }
            const std::size_t m = static_cast<std::size_t>(blk.n);
            const Cyclotomic c1 = chi.evaluate(scaled_vec(blk.f, blk.n));
            const Cyclotomic c2 = chi.evaluate(scaled_vec(blk.g, blk.n));
            // omega = A^{-d/2}; clock C = diag(omega^k) and shift S satisfy C S = omega S C.
            const long omega_exp = mod_floor(-Integer(sb.d[b] % n).get_si() * t.half(), n);
            CycloMatrix clock(m, m, order), clock_inv(m, m, order);
            for (std::size_t k = 0; k < m; ++k) {
                clock(k, k) = Cyclotomic::zeta(order, static_cast<long>(k) * omega_exp * (order / n));
                clock_inv(k, k) = clock(k, k).inverse();
            }
            auto twisted_shift = [&](const Cyclotomic& wrap) {
                CycloMatrix s(m, m, order);
                for (std::size_t k = 0; k + 1 < m; ++k) s(k + 1, k) = Cyclotomic::one(order);
                s(0, m - 1) = wrap.embed(order);
                return s;
            };
            CycloMatrix x, y;
            if (auto lam = nth_root(c1, blk.n, order)) {
                x = clock * *lam;
                y = twisted_shift(c2);
            } else if (auto mu = nth_root(c2, blk.n, order)) {
                x = twisted_shift(c1);
                y = clock_inv * *mu;
            } else {
                ok = false;
                break;
            }
            adapted[2 * b] = on_slot(x, dims, slot);
            adapted[2 * b + 1] = on_slot(y, dims, slot);
            ++slot;
        }
        if (!ok) continue;
        for (std::size_t j = sb.radical_start(); j < r; ++j)
            adapted[j] = id * chi.evaluate(sb.p.row_long(j)).embed(order);

        std::vector<CycloMatrix> adapted_inv;
        adapted_inv.reserve(r);
        for (const auto& a : adapted) adapted_inv.push_back(a.inverse());

        TorusIrrep rep;
        rep.dimension = dimension;
        rep.field_order = order;
        rep.character = chi;
        rep.block_invariants = sb.d;
        const long hh = (t.half() * t.half()) % n;
        for (std::size_t k = 0; k < r; ++k) {
            // e_k = sum_i c_i u_i and Z_{e_k} = A^{sum_{i<j} c_i c_j (u_i,u_j)/4} prod_i Z_{u_i}^{c_i}.
            const LatticeVector c = sb.p_inverse.row_long(k);
            long phase = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j)
                    phase += mod_floor(c[i] * c[j] % n * mod_floor(sb.gram(i, j).get_si(), n), n);
            CycloMatrix img = id * Cyclotomic::zeta(order, mod_floor(phase * hh, n) * (order / n));
            for (std::size_t i = 0; i < r; ++i) {
                if (c[i] == 0) continue;
                const CycloMatrix& base = c[i] > 0 ? adapted[i] : adapted_inv[i];
                for (long e = 0; e < std::labs(c[i]); ++e) img = img * base;
            }
            rep.generators.push_back(img);
        }
        for (const auto& g : rep.generators) rep.inverses.push_back(g.inverse());
        return rep;
    }
    throw std::domain_error("character values need roots outside the cyclotomic field");
}

CycloMatrix image_of_monomial(const QuantumTorus& t, const TorusIrrep& rho, const LatticeVector& v) {
    const long n = t.n();
    const long hh = (t.half() * t.half()) % n;
    long phase = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            phase += mod_floor(v[i] * v[j] % n * mod_floor(t.lattice().form(i, j).get_si(), n), n);
    const int order = rho.field_order;
    CycloMatrix img = CycloMatrix::scalar(rho.dimension, Cyclotomic::zeta(order, mod_floor(phase * hh, n) * (order / n)));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const CycloMatrix& base = v[i] > 0 ? rho.generators[i] : rho.inverses[i];
        for (long e = 0; e < std::labs(v[i]); ++e) img = img * base;
    }
    return img;
}

namespace {

struct CheckTask {
    bool relation;
    std::size_t i, j;
};

std::vector<CheckTask> check_tasks(const QuantumTorus& t) {
    std::vector<CheckTask> tasks;
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = i + 1; j < t.rank(); ++j) tasks.push_back({true, i, j});
    for (std::size_t k = 0; k < t.center_basis().rows(); ++k) tasks.push_back({false, k, 0});
    return tasks;
}

bool run_task(const QuantumTorus& t, const TorusIrrep& rho, const CheckTask& task) {
    const int order = rho.field_order;
    if (task.relation) {
        const long w = t.lattice().form(task.i, task.j).get_si();
        const Cyclotomic f = t.commutation_factor(w).embed(order);
        const auto& a = rho.generators[task.i];
        const auto& b = rho.generators[task.j];
        return a * b == (b * a) * f;
    }
    const LatticeVector v = t.center_basis().row_long(task.i);
    return image_of_monomial(t, rho, v).is_scalar(rho.character.evaluate(v).embed(order));
}

}  // namespace

IrrepCheck verify_irrep_serial(const QuantumTorus& t, const TorusIrrep& rho) {
    IrrepCheck out;
    for (const auto& task : check_tasks(t)) {
        const bool ok = run_task(t, rho, task);
        if (task.relation) {
            ++out.relation_checks;
            out.relation_failures += !ok;
        } else {
            ++out.center_checks;
            out.center_failures += !ok;
        }
    }
    return out;
}

IrrepCheck verify_irrep_omp(const QuantumTorus& t, const TorusIrrep& rho) {
    const auto tasks = check_tasks(t);
    std::vector<char> ok(tasks.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(tasks.size()); ++k) ok[k] = run_task(t, rho, tasks[k]) ? 1 : 0;
    IrrepCheck out;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (tasks[k].relation) {
            ++out.relation_checks;
            out.relation_failures += !ok[k];
        } else {
            ++out.center_checks;
            out.center_failures += !ok[k];
        }
    }
    return out;
}

}  // namespace skeinlab
