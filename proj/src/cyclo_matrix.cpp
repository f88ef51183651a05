#include "skeinlab/cyclo_matrix.hpp"

#include <stdexcept>

namespace skeinlab {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, Cyclotomic(order)) {}

CycloMatrix CycloMatrix::identity(std::size_t n, int order) {
    return scalar(n, Cyclotomic::one(order));
}

CycloMatrix CycloMatrix::scalar(std::size_t n, const Cyclotomic& c) {
    CycloMatrix m(n, n, c.order());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols_ != b.rows_ || a.order_ != b.order_) throw std::invalid_argument("incompatible cyclotomic matrices");
    CycloMatrix c(a.rows_, b.cols_, a.order_);
    // Row supports of b, gathered once.
    std::vector<std::vector<std::size_t>> support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!b(k, j).is_zero()) support[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Cyclotomic& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j : support[k]) c(i, j) += x * b(k, j);
        }
    return c;
}

CycloMatrix CycloMatrix::operator*(const Cyclotomic& s) const {
    CycloMatrix m(*this);
    for (auto& x : m.data_)
        if (!x.is_zero()) x *= s;
    return m;
}

CycloMatrix CycloMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    CycloMatrix a(*this);
    CycloMatrix inv = identity(n, order_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw std::domain_error("singular cyclotomic matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Cyclotomic pinv = a(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(c, j).is_zero()) a(c, j) *= pinv;
            if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Cyclotomic f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

CycloMatrix CycloMatrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloMatrix result = identity(rows_, order_);
    CycloMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool CycloMatrix::is_scalar(const Cyclotomic& c) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Cyclotomic& x = (*this)(i, j);
            if (i == j ? x != c : !x.is_zero()) return false;
        }
    return true;
}

std::size_t CycloMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += !x.is_zero();
    return n;
}

}  // namespace skeinlab
