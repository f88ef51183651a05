#pragma once

#include "skeinlab/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace skeinlab {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> row(std::size_t i) const;
    std::vector<long> row_long(std::size_t i) const;
    void append_row(const std::vector<Integer>& r);

    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_skew_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    std::vector<Integer> apply(const std::vector<Integer>& v) const;  // M v
    std::vector<Integer> left_apply(const std::vector<Integer>& v) const;  // v^T M

    // Row operations.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& c);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Bilinear form value x^T W y.
Integer bilinear(const IntMatrix& w, const std::vector<Integer>& x, const std::vector<Integer>& y);

std::vector<Integer> to_integer_vector(const std::vector<long>& v);
std::vector<long> to_long_vector(const std::vector<Integer>& v);

}  // namespace skeinlab
