#pragma once

#include "perazzo/field.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace perazzo {

template <Field F>
using Vector = std::vector<typename F::Element>;

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.field_.one();
        return m;
    }

    static Matrix from_rows(F field, const std::vector<std::vector<Element>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    static Matrix from_columns(F field, std::size_t rows, const std::vector<Vector<F>>& cols) {
        Matrix m(field, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vector<F> column(std::size_t c) const {
        Vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e))
                return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void place(std::size_t r0, std::size_t c0, const Matrix& block) {
        if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
            throw std::out_of_range("block does not fit");
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                (*this)(r0 + r, c0 + c) = block(r, c);
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix s(field_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < idx.size(); ++j)
                s(r, j) = (*this)(r, idx[j]);
        return s;
    }

    Matrix select_rows(std::span<const std::size_t> idx) const {
        Matrix s(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t c = 0; c < cols_; ++c)
                s(i, c) = (*this)(idx[i], c);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.field_.equal(a.data_[i], b.data_[i]))
                return false;
        return true;
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b);
template <Field F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b);
template <Field F>
Matrix<F> scaled(const Matrix<F>& a, const typename F::Element& s);
template <Field F>
Vector<F> apply(const Matrix<F>& a, std::span<const typename F::Element> v);

/// Reduced row echelon form: `reduced` holds the rank nonzero rows, each
/// with a leading one in column pivots[r] and zeros elsewhere in that column.
template <Field F>
struct RowEchelon {
    std::vector<std::size_t> pivots;
    Matrix<F> reduced;
};

/// Pivots are chosen column by column, left to right, taking the first
/// nonzero entry from the top; the result is deterministic.
template <Field F>
RowEchelon<F> reduced_row_echelon(const Matrix<F>& m);

template <Field F>
std::size_t rank(const Matrix<F>& m);

/// cols - rank independent vectors spanning {v : m v = 0}.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m);

template <Field F>
struct ColumnSpace {
    std::vector<std::size_t> pivots;  // strictly increasing
    Matrix<F> basis;                  // the pivot columns of the input
};

/// Greedy left-to-right choice of independent columns.
template <Field F>
ColumnSpace<F> column_space_basis(const Matrix<F>& m);

/// Throws std::domain_error if m is not square and invertible.
template <Field F>
Matrix<F> inverse(const Matrix<F>& m);

}  // namespace perazzo
