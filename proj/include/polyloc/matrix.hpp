#ifndef POLYLOC_MATRIX_HPP
#define POLYLOC_MATRIX_HPP

#include "polyloc/mpoly.hpp"
#include "polyloc/rational.hpp"
#include "polyloc/upoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyloc {

// Row-major dense matrix. Entry types used here: Rational, MPoly, UPoly.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                 std::to_string(rows_ * cols_));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const { return data_; }

    // Leading k x k principal submatrix.
    Matrix leading(std::size_t k) const
    {
        Matrix out(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                out(i, j) = (*this)(i, j);
        return out;
    }

    Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const
    {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    template <typename F>
    auto map(F&& fn) const
    {
        using U = decltype(fn(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = fn((*this)(i, j));
        return out;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MPoly>;
using UPolyMatrix = Matrix<UPoly>;

namespace detail {

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline bool is_zero(const UPoly& p) { return p.is_zero(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline MPoly exact_quotient(const MPoly& a, const MPoly& b) { return exact_div(a, b); }
inline UPoly exact_quotient(const UPoly& a, const UPoly& b) { return exact_div(a, b); }

template <typename T>
T one_like(const T& sample);
template <>
inline Rational one_like(const Rational&) { return Rational(1); }
template <>
inline MPoly one_like(const MPoly& sample) { return MPoly(sample.nvars(), Rational(1)); }
template <>
inline UPoly one_like(const UPoly&) { return UPoly(Rational(1)); }

template <typename T>
T zero_like(const T& sample);
template <>
inline Rational zero_like(const Rational&) { return Rational(0); }
template <>
inline MPoly zero_like(const MPoly& sample) { return MPoly(sample.nvars()); }
template <>
inline UPoly zero_like(const UPoly&) { return UPoly(); }

} // namespace detail

// Fraction-free Gaussian elimination; every division is exact in the entry ring.
template <typename T>
T determinant_bareiss(Matrix<T> m)
{
    if (!m.is_square())
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return T();
    bool negate = false;
    T prev = detail::one_like(m(0, 0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::is_zero(m(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < n && detail::is_zero(m(pivot, k)))
                ++pivot;
            if (pivot == n)
                return detail::zero_like(m(0, 0));
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(pivot, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = detail::exact_quotient(num, prev);
            }
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? T(-det) : det;
}

// Laplace expansion along the first row.
template <typename T>
T determinant_cofactor(const Matrix<T>& m)
{
    if (!m.is_square())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return T();
    if (n == 1)
        return m(0, 0);
    if (n == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T acc = detail::zero_like(m(0, 0));
    std::vector<std::size_t> rows;
    for (std::size_t r = 1; r < n; ++r)
        rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c) {
        if (detail::is_zero(m(0, c)))
            continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != c)
                cols.push_back(j);
        T minor = determinant_cofactor(m.select(rows, cols));
        T term = m(0, c) * minor;
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Cofactor expansion up to 4x4, Bareiss beyond.
template <typename T>
T determinant(const Matrix<T>& m)
{
    if (!m.is_square())
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    if (m.rows() <= 4)
        return determinant_cofactor(m);
    return determinant_bareiss(m);
}

QMatrix identity_matrix(std::size_t n);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
// Exact inverse by Gauss-Jordan; throws when singular.
QMatrix inverse(const QMatrix& a);

// Second partials over the selected variables (0-based indices).
PolyMatrix hessian(const MPoly& f, const std::vector<std::size_t>& vars);
PolyMatrix hessian(const MPoly& f);

// g(y) = f(ainv * y)
MPoly substitute_linear(const MPoly& f, const QMatrix& ainv);

} // namespace polyloc

#endif
