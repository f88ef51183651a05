#include "skeinlab/sl2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace skeinlab {

namespace {

int common_order(std::initializer_list<const Cyclotomic*> xs) {
    int m = 1;
    for (const Cyclotomic* x : xs) m = std::lcm(m, x->order());
    return m;
}

std::string cyclotomic_key(const Cyclotomic& x) {
    std::string out;
    for (const Rational& q : x.coeffs()) {
        out += to_string(q);
        out += ',';
    }
    return out;
}

}  // namespace

SL2Mat::SL2Mat(Unchecked, Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

SL2Mat::SL2Mat(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) {
    const int m = common_order({&a, &b, &c, &d});
    a_ = a.embed(m);
    b_ = b.embed(m);
    c_ = c.embed(m);
    d_ = d.embed(m);
    if (!(a_ * d_ - b_ * c_).is_one()) throw std::invalid_argument("matrix does not have determinant 1");
}

SL2Mat SL2Mat::identity(int order) {
    return SL2Mat(Unchecked{}, Cyclotomic::one(order), Cyclotomic(order), Cyclotomic(order), Cyclotomic::one(order));
}

SL2Mat SL2Mat::inverse() const { return SL2Mat(Unchecked{}, d_, -b_, -c_, a_); }

SL2Mat SL2Mat::embed(int target) const {
    return SL2Mat(Unchecked{}, a_.embed(target), b_.embed(target), c_.embed(target), d_.embed(target));
}

bool SL2Mat::is_central() const {
    return b_.is_zero() && c_.is_zero() && a_ == d_ && a_.is_rational() && (a_.is_one() || (-a_).is_one());
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    if (x.order() != y.order()) {
        const int m = std::lcm(x.order(), y.order());
        return x.embed(m) * y.embed(m);
    }
    return SL2Mat(SL2Mat::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                  x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

bool operator==(const SL2Mat& x, const SL2Mat& y) {
    if (x.order() != y.order()) {
        const int m = std::lcm(x.order(), y.order());
        return x.embed(m) == y.embed(m);
    }
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string SL2Mat::key() const {
    return std::to_string(order()) + "|" + cyclotomic_key(a_) + "|" + cyclotomic_key(b_) + "|" + cyclotomic_key(c_) +
           "|" + cyclotomic_key(d_);
}

SL2Rep::SL2Rep(int g, std::vector<SL2Mat> imgs) : genus(g), images(std::move(imgs)) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    if (images.size() != static_cast<std::size_t>(2 * g))
        throw std::invalid_argument("a genus " + std::to_string(g) + " representation needs " +
                                    std::to_string(2 * g) + " matrices");
    int m = 1;
    for (const SL2Mat& x : images) m = std::lcm(m, x.order());
    for (SL2Mat& x : images)
        if (x.order() != m) x = x.embed(m);
}

SL2Rep SL2Rep::trivial(int g, int order) {
    return SL2Rep(g, std::vector<SL2Mat>(2 * g, SL2Mat::identity(order)));
}

std::string SL2Rep::key() const {
    std::string out;
    for (const SL2Mat& x : images) out += x.key() + ";";
    return out;
}

SL2Mat evaluate_word(const SL2Rep& rho, const FreeWord& w) {
    SL2Mat out = SL2Mat::identity(rho.order());
    for (int x : w) {
        const int idx = std::abs(x) - 1;
        if (idx >= static_cast<int>(rho.images.size())) throw std::invalid_argument("word letter exceeds genus");
        out = out * (x > 0 ? rho.images[idx] : rho.images[idx].inverse());
    }
    return out;
}

SL2Rep act(const FreeGroupEndomorphism& phi, const SL2Rep& rho) {
    if (phi.genus() != rho.genus) throw std::invalid_argument("mapping class and representation genus differ");
    std::vector<SL2Mat> images;
    images.reserve(phi.images().size());
    for (const FreeWord& w : phi.images()) images.push_back(evaluate_word(rho, w));
    return SL2Rep(rho.genus, std::move(images));
}

SL2Mat moment_map(const SL2Rep& rho) { return evaluate_word(rho, boundary_word(rho.genus)); }

std::string to_string(Cell c) { return c == Cell::big ? "big" : "reduced"; }

std::string to_string(ConjugacyKind k) {
    switch (k) {
    case ConjugacyKind::central_plus: return "central+";
    case ConjugacyKind::central_minus: return "central-";
    case ConjugacyKind::parabolic_plus: return "parabolic+";
    case ConjugacyKind::parabolic_minus: return "parabolic-";
    case ConjugacyKind::semisimple: return "semisimple";
    }
    return "?";
}

LeafDescriptor classify_sts_leaf(const SL2Mat& m) {
    LeafDescriptor out;
    out.cell = cell_index(m);
    out.trace = m.trace();
    const Cyclotomic two(m.order(), Rational(2));
    if (m.is_central()) {
        out.kind = m.a().is_one() ? ConjugacyKind::central_plus : ConjugacyKind::central_minus;
    } else if (out.trace == two) {
        out.kind = ConjugacyKind::parabolic_plus;
    } else if (out.trace == -two) {
        out.kind = ConjugacyKind::parabolic_minus;
    } else {
        out.kind = ConjugacyKind::semisimple;
    }
    // With a = 0 the determinant forces c = -1/b, so b names the dressing orbit.
    if (out.cell == 1) out.dressing_b = m.b();
    return out;
}

std::pair<int, int> classify_double_leaf(const SL2Mat& g1, const SL2Mat& g2) {
    return {cell_index(g2.inverse() * g1), cell_index(g2 * g1.inverse())};
}

SL2Mat toric_action(const Cyclotomic& z, const SL2Mat& m) {
    if (z.is_zero()) throw std::invalid_argument("toric parameter must be invertible");
    const int order = std::lcm(z.order(), m.order());
    const SL2Mat x = m.embed(order);
    const Cyclotomic z2 = z.embed(order).pow(2);
    return SL2Mat(x.a(), z2 * x.b(), z2.inverse() * x.c(), x.d());
}

std::vector<SL2Mat> group_closure(const std::vector<SL2Mat>& gens, std::size_t cap) {
    int order = 1;
    for (const SL2Mat& g : gens) order = std::lcm(order, g.order());
    std::map<std::string, SL2Mat> seen;
    std::deque<SL2Mat> frontier;
    const SL2Mat id = SL2Mat::identity(order);
    seen.emplace(id.key(), id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        const SL2Mat x = frontier.front();
        frontier.pop_front();
        for (const SL2Mat& g : gens) {
            SL2Mat y = x * g.embed(order);
            if (seen.emplace(y.key(), y).second) {
                if (seen.size() > cap)
                    throw CapError("group closure exceeded " + std::to_string(cap) + " elements", cap);
                frontier.push_back(std::move(y));
            }
        }
    }
    std::vector<SL2Mat> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

std::vector<SL2Rep> enumerate_hom_to_finite(const std::vector<SL2Mat>& group, int genus, std::size_t limit) {
    if (group.empty()) throw std::invalid_argument("group must contain the identity");
    const std::size_t slots = 2 * genus;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (total > limit / group.size()) throw CapError("Hom(pi_1, H) is larger than the enumeration limit", limit);
        total *= group.size();
    }
    std::vector<SL2Rep> out;
    out.reserve(total);
    std::vector<std::size_t> digits(slots, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<SL2Mat> images;
        images.reserve(slots);
        for (std::size_t d : digits) images.push_back(group[d]);
        out.emplace_back(genus, std::move(images));
        for (std::size_t i = slots; i-- > 0;) {
            if (++digits[i] < group.size()) break;
            digits[i] = 0;
        }
    }
    return out;
}

OrbitData orbit_closure(const std::vector<SL2Rep>& seeds, const std::vector<FreeGroupEndomorphism>& gens,
                        std::size_t cap) {
    if (seeds.empty()) throw std::invalid_argument("orbit closure needs at least one seed");
    if (cap < 1) throw std::invalid_argument("orbit cap must be positive");
    for (const auto& g : gens) {
        if (g.genus() != seeds.front().genus) throw std::invalid_argument("generator genus differs from seed genus");
        if (!validate_automorphism(g)) throw std::invalid_argument("generator does not fix the boundary word");
    }
    OrbitData out{gens, {}, moment_map(seeds.front()), Cell::big};
    out.cell = classify_cell(out.mu);
    std::set<std::string> seen;
    std::deque<SL2Rep> frontier;
    auto visit = [&](const SL2Rep& r) {
        if (!seen.insert(r.key()).second) return;
        if (moment_map(r) != out.mu) throw std::runtime_error("moment map is not constant on the orbit");
        if (seen.size() > cap) throw CapError("orbit exceeded " + std::to_string(cap) + " points", cap);
        out.points.push_back(r);
        frontier.push_back(r);
    };
    for (const SL2Rep& s : seeds) visit(s);
    while (!frontier.empty()) {
        const SL2Rep r = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) visit(act(g, r));
    }
    return out;
}

Integer rep_dimension(Cell cell, int genus, std::size_t orbit_size, long n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
    Integer p;
    const unsigned long e = cell == Cell::big ? 3 * genus : 3 * genus - 1;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), e);
    return p * Integer(static_cast<unsigned long>(orbit_size));
}

std::vector<SL2Mat> quaternion_generators() {
    const Cyclotomic zero(4), one = Cyclotomic::one(4), i = Cyclotomic::zeta(4, 1);
    return {SL2Mat(zero, one, -one, zero), SL2Mat(i, zero, zero, -i)};
}

}  // namespace skeinlab
