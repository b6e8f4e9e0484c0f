#include "shape/integer_matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace shape {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> diag) {
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m(i, i) = diag[i];
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
    IntegerMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("IntegerMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix IntegerMatrix::select_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("IntegerMatrix::select_rows");
    IntegerMatrix m(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
    return m;
}

IntegerMatrix IntegerMatrix::select_cols(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("IntegerMatrix::select_cols");
    IntegerMatrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
    return m;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("IntegerMatrix::hstack: row mismatch");
    IntegerMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
    }
    return m;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("IntegerMatrix::vstack: column mismatch");
    IntegerMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(rows_ + r, c) = other(r, c);
    return m;
}

std::vector<Integer> IntegerMatrix::apply(std::span<const Integer> v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntegerMatrix::apply: length mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] != 0) acc += (*this)(r, c) * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const Integer& s = (*this)(src, c);
        if (s != 0) (*this)(dst, c) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const Integer& s = (*this)(r, src);
        if (s != 0) (*this)(r, dst) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntegerMatrix product: inner dimension mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Integer& bkj = b(k, j);
                if (bkj != 0) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("IntegerMatrix sum: shape mismatch");
    IntegerMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

std::string to_string(const IntegerMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace shape
