#pragma once

#include "tcpd/errors.hpp"
#include "tcpd/ring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tcpd {

/// Dense row-major matrix over a scalar ring.
template <ScalarRing Ring>
class Matrix {
public:
    using Elem = typename Ring::Elem;

    Matrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                std::to_string(rows_ * cols_));
    }

    static Matrix identity(const Ring& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(ring, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    std::span<const Elem> data() const noexcept { return data_; }

    bool is_zero() const noexcept {
        for (const auto& e : data_)
            if (!ring_.is_zero(e)) return false;
        return true;
    }

    bool operator==(const Matrix& other) const {
        return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

template <ScalarRing Ring>
Matrix<Ring> multiply(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("matrix product over different rings");
    if (a.cols() != b.rows())
        throw ShapeMismatch("matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Ring& ring = a.ring();
    Matrix<Ring> c(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (ring.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
        }
    return c;
}

/// Columns [first, first + count).
template <ScalarRing Ring>
Matrix<Ring> column_block(const Matrix<Ring>& m, std::size_t first, std::size_t count) {
    if (first + count > m.cols()) throw ShapeMismatch("column block out of range");
    Matrix<Ring> out(m.ring(), m.rows(), count);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = m(i, first + j);
    return out;
}

/// Rows [first, first + count).
template <ScalarRing Ring>
Matrix<Ring> row_block(const Matrix<Ring>& m, std::size_t first, std::size_t count) {
    if (first + count > m.rows()) throw ShapeMismatch("row block out of range");
    Matrix<Ring> out(m.ring(), count, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(first + i, j);
    return out;
}

/// [a | b]
template <ScalarRing Ring>
Matrix<Ring> hcat(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hcat row counts differ");
    Matrix<Ring> out(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

template <ScalarRing Ring>
Matrix<Ring> column_matrix(const Ring& ring, std::span<const typename Ring::Elem> v) {
    Matrix<Ring> out(ring, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
    return out;
}

} // namespace tcpd
