#pragma once

#include "skeinlab/cyclotomic.hpp"

#include <vector>

namespace skeinlab {

// Dense square-or-rectangular matrix over Q(zeta_m). Products skip zero
// entries, which keeps monomial (clock/shift type) matrices cheap.
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(std::size_t rows, std::size_t cols, int order);

    static CycloMatrix identity(std::size_t n, int order);
    static CycloMatrix scalar(std::size_t n, const Cyclotomic& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int order() const { return order_; }

    Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    CycloMatrix operator*(const Cyclotomic& c) const;
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

    CycloMatrix inverse() const;  // Gauss-Jordan; throws if singular
    CycloMatrix pow(long e) const;
    bool is_scalar(const Cyclotomic& c) const;
    std::size_t nonzeros() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int order_ = 1;
    std::vector<Cyclotomic> data_;
};

}  // namespace skeinlab
