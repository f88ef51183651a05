#include "skeinlab/cyclotomic.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skeinlab {

namespace {

using Poly = std::vector<Rational>;

void trim_poly(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; divisor must be monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {};
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        Integer c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

// Remainder and quotient of a by b over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim_poly(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim_poly(a);
    }
    trim_poly(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim_poly(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim_poly(a);
    return a;
}

void reduce_mod(Poly& p, const std::vector<Integer>& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
    }
    if (p.size() > d) p.resize(d);
    trim_poly(p);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
    return num;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
    modulus_ = cyclotomic_polynomial(order);
    degree_ = static_cast<int>(modulus_.size()) - 1;
    powers_.reserve(order);
    Poly cur{Rational(1)};
    for (int k = 0; k < order; ++k) {
        Poly r = cur;
        reduce_mod(r, modulus_);
        powers_.push_back(r);
        cur.insert(cur.begin(), Rational(0));
        reduce_mod(cur, modulus_);
    }
}

const CyclotomicField& CyclotomicField::get(int order) {
    constexpr int kFastSlots = 1024;
    static std::array<std::atomic<const CyclotomicField*>, kFastSlots> fast{};
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (order < kFastSlots) {
        if (const CyclotomicField* f = fast[order].load(std::memory_order_acquire)) return *f;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
    if (order < kFastSlots) fast[order].store(it->second.get(), std::memory_order_release);
    return *it->second;
}

const std::vector<Rational>& CyclotomicField::zeta_power(long k) const {
    return powers_[static_cast<std::size_t>(mod_floor(k, order_))];
}

Cyclotomic::Cyclotomic(int order) : field_(&CyclotomicField::get(order)) {}

Cyclotomic::Cyclotomic(int order, const Rational& q) : field_(&CyclotomicField::get(order)) {
    if (q != 0) coeffs_.push_back(q);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : field_(&CyclotomicField::get(order)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    reduce_mod(coeffs_, field_->modulus());
}

Cyclotomic Cyclotomic::zeta(int order, long k) {
    Cyclotomic z(order);
    z.coeffs_ = z.field_->zeta_power(k);
    return z;
}

std::vector<Rational> Cyclotomic::coeffs() const {
    std::vector<Rational> full(coeffs_);
    full.resize(field_->degree(), 0);
    return full;
}

bool Cyclotomic::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                                    std::to_string(o.order()));
}

void Cyclotomic::trim() { trim_poly(coeffs_); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same(o);
    if (is_zero()) return *this;
    if (o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (o.coeffs_.size() == 1) return *this *= o.coeffs_[0];
    if (coeffs_.size() == 1) {
        Rational c = coeffs_[0];
        coeffs_ = o.coeffs_;
        return *this *= c;
    }
    coeffs_ = poly_mul(coeffs_, o.coeffs_);
    reduce_mod(coeffs_, field_->modulus());
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
    if (q == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= q;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::times_zeta(long k) const {
    Cyclotomic z(order());
    z.coeffs_ = field_->zeta_power(k);
    return *this * z;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero cyclotomic");
    if (is_rational()) return Cyclotomic(order(), Rational(1) / coeffs_[0]);
    // Extended Euclid: track s with s*a = r (mod Phi).
    Poly phi(field_->modulus().begin(), field_->modulus().end());
    Poly r0 = phi, r1 = coeffs_;
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: non-unit residue");
    Rational c = Rational(1) / r1[0];
    for (auto& x : s1) x *= c;
    reduce_mod(s1, field_->modulus());
    Cyclotomic out(order());
    out.coeffs_ = std::move(s1);
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = one(order());
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::embed(int target) const {
    if (target % order() != 0)
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                    std::to_string(target) + ")");
    const long step = target / order();
    Cyclotomic out(target);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += Cyclotomic::zeta(target, static_cast<long>(i) * step) * coeffs_[i];
    }
    return out;
}

std::pair<long, int> Cyclotomic::as_signed_root() const {
    for (long k = 0; k < order(); ++k) {
        const auto& z = field_->zeta_power(k);
        if (z == coeffs_) return {k, 1};
        if (z.size() == coeffs_.size()) {
            bool neg = true;
            for (std::size_t i = 0; i < z.size() && neg; ++i) neg = (z[i] == -coeffs_[i]);
            if (neg) return {k, -1};
        }
    }
    return {-1, 0};
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Rational a = abs(coeffs_[i]);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace skeinlab
