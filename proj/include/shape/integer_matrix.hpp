#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace shape {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Every boundary, bonding and change-of-basis matrix in the library is one
/// of these. Zero-sized shapes (0 x n, n x 0) are valid and common.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> diag);
    static IntegerMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Integer> column(std::size_t c) const;

    IntegerMatrix transpose() const;
    IntegerMatrix select_rows(std::size_t first, std::size_t count) const;
    IntegerMatrix select_cols(std::size_t first, std::size_t count) const;
    /// [this | other]; row counts must agree.
    IntegerMatrix hstack(const IntegerMatrix& other) const;
    /// [this ; other]; column counts must agree.
    IntegerMatrix vstack(const IntegerMatrix& other) const;

    std::vector<Integer> apply(std::span<const Integer> v) const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    const std::vector<Integer>& entries() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);
std::string to_string(const IntegerMatrix& m);

}  // namespace shape
