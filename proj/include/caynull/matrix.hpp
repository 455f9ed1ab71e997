#pragma once

/// @file matrix.hpp
/// @brief Small dense row-major matrix, templated on the entry type.
///
/// Two instantiations are used throughout: int_matrix (arbitrary-precision
/// integers, the exact side) and real_matrix (doubles, the numeric probe
/// side). Desk-scale only; no attempt at sparsity or blocking.

#include <caynull/intpoly.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace caynull {

template <typename T>
class dense_matrix {
public:
    dense_matrix() = default;

    dense_matrix(std::size_t rows, std::size_t cols, T init = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static dense_matrix identity(std::size_t n) {
        dense_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    dense_matrix transpose() const {
        dense_matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    T trace() const {
        if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    friend dense_matrix operator+(const dense_matrix& a, const dense_matrix& b) {
        a.require_same_shape(b);
        dense_matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
        return m;
    }

    friend dense_matrix operator-(const dense_matrix& a, const dense_matrix& b) {
        a.require_same_shape(b);
        dense_matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
        return m;
    }

    friend dense_matrix operator*(const dense_matrix& a, const dense_matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        dense_matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend bool operator==(const dense_matrix& a, const dense_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const dense_matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix op: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using int_matrix = dense_matrix<bigint>;
using real_matrix = dense_matrix<double>;

inline real_matrix to_real(const int_matrix& m) {
    real_matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).convert_to<double>();
    return r;
}

}  // namespace caynull
