#include "polyloc/matrix.hpp"

#include <numeric>

namespace polyloc {

QMatrix identity_matrix(std::size_t n)
{
    QMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product shape mismatch");
    QMatrix out(a.rows(), b.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

QMatrix inverse(const QMatrix& a)
{
    if (!a.is_square())
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    QMatrix work(a);
    QMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw Error("inverse of a singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(col, j), work(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        Rational scale = 1 / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col) == 0)
                continue;
            Rational factor = work(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

PolyMatrix hessian(const MPoly& f, const std::vector<std::size_t>& vars)
{
    const std::size_t k = vars.size();
    PolyMatrix h(k, k, MPoly(f.nvars()));
    for (std::size_t i = 0; i < k; ++i) {
        MPoly di = f.derivative(vars[i]);
        for (std::size_t j = i; j < k; ++j) {
            h(i, j) = di.derivative(vars[j]);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

PolyMatrix hessian(const MPoly& f)
{
    std::vector<std::size_t> vars(f.nvars());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    return hessian(f, vars);
}

MPoly substitute_linear(const MPoly& f, const QMatrix& ainv)
{
    const std::size_t n = f.nvars();
    if (!ainv.is_square() || ainv.rows() != n)
        throw DimensionError("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    std::vector<MPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MPoly xi(n);
        for (std::size_t k = 0; k < n; ++k)
            xi.add_term(Monomial::variable(n, k), ainv(i, k));
        images.push_back(std::move(xi));
    }
    return f.compose(images);
}

} // namespace polyloc
