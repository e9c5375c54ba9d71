#include "polyloc/certify.hpp"

#include <algorithm>

namespace polyloc {

namespace {

UPolyMatrix reduce(UPolyMatrix m, const UPoly& w)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rem(m(i, j), w);
    return m;
}

// a * q for a polynomial matrix a and a rational matrix q.
UPolyMatrix times(const UPolyMatrix& a, const QMatrix& q)
{
    UPolyMatrix out(a.rows(), q.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (q(k, j) != 0)
                    out(i, j) += a(i, k) * q(k, j);
    return out;
}

QMatrix leading_block(const QMatrix& ainv, std::size_t nx)
{
    QMatrix m(nx, nx);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            m(i, j) = ainv(i, j);
    return m;
}

std::vector<std::size_t> iota(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

MPoly widen(const MPoly& p, std::size_t nvars)
{
    if (p.nvars() > nvars)
        throw DimensionError("polynomial has more variables than the representation");
    return p.nvars() == nvars ? p : p.extend(nvars);
}

UPoly determinant_mod(const UPolyMatrix& m, const UPoly& w)
{
    if (m.rows() == 0)
        return UPoly(Rational(1));
    return rem(determinant(m), w);
}

// Advances `comb` to the next m-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n)
{
    const std::size_t m = comb.size();
    for (std::size_t i = m; i-- > 0;) {
        if (comb[i] < n - m + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < m; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

HessianCurve hessian_curve(const MPoly& f, const UnivariateRep& rep, std::size_t nx, HessianConvention convention)
{
    if (nx > rep.nvars)
        throw DimensionError("more Hessian variables than representation coordinates");
    MPoly g = widen(f, rep.nvars);
    PolyMatrix hm = hessian(g, iota(nx));
    PointEvaluator eval(rep.point(), rep.w);

    HessianCurve hc;
    hc.w = rep.w;
    hc.convention = convention;
    hc.h = hm.map([&](const MPoly& p) { return eval(p); });
    if (convention == HessianConvention::Congruent) {
        QMatrix m = leading_block(rep.cov.ainv, nx);
        hc.h = reduce(times(times(hc.h, m).transpose(), m), rep.w);
    }
    return hc;
}

JacobianCurve jacobian_curve(const std::vector<MPoly>& h, const UnivariateRep& rep, std::size_t nx,
                             HessianConvention convention)
{
    if (nx > rep.nvars)
        throw DimensionError("more Jacobian variables than representation coordinates");
    PointEvaluator eval(rep.point(), rep.w);
    JacobianCurve jc;
    jc.w = rep.w;
    jc.c = UPolyMatrix(h.size(), nx);
    for (std::size_t i = 0; i < h.size(); ++i) {
        MPoly hi = widen(h[i], rep.nvars);
        for (std::size_t k = 0; k < nx; ++k)
            jc.c(i, k) = eval(hi.derivative(k));
    }
    if (convention == HessianConvention::Congruent)
        jc.c = reduce(times(jc.c, leading_block(rep.cov.ainv, nx)), rep.w);
    return jc;
}

std::vector<UPoly> leading_minors_mod(const UPolyMatrix& m, const UPoly& w)
{
    std::vector<UPoly> out;
    for (std::size_t k = 1; k <= m.rows(); ++k)
        out.push_back(determinant_mod(m.leading(k), w));
    return out;
}

Certifier::Certifier(HessianCurve h, std::optional<JacobianCurve> c) : h_(std::move(h)), c_(std::move(c))
{
    if (!h_.h.is_square())
        throw DimensionError("Hessian curve is not square");
    if (c_ && c_->c.cols() != h_.h.rows())
        throw DimensionError("Jacobian curve has " + std::to_string(c_->c.cols()) + " columns, Hessian has " +
                             std::to_string(h_.h.rows()) + " rows");
    if (c_ && c_->c.rows() == 0)
        c_.reset();
    leading_minors_ = leading_minors_mod(h_.h, h_.w);
}

const UPoly& Certifier::determinant() const
{
    static const UPoly one(Rational(1));
    return leading_minors_.empty() ? one : leading_minors_.back();
}

PdResult Certifier::pd_at(const AlgebraicNumber& a) const
{
    PdResult r;
    r.positive = true;
    for (std::size_t k = 0; k < leading_minors_.size(); ++k) {
        int s = sign_at(leading_minors_[k], a);
        r.minor_signs.push_back(s);
        if (s == 0)
            r.degenerate = true;
        if (s != 1 && !r.witness) {
            r.witness = k;
            r.positive = false;
        }
    }
    return r;
}

std::optional<std::vector<std::size_t>> Certifier::pivot_columns(const AlgebraicNumber& a) const
{
    const std::size_t m = c_->c.rows();
    const std::size_t n = c_->c.cols();
    if (m > n)
        return std::nullopt;
    std::vector<std::size_t> comb = iota(m);
    const std::vector<std::size_t> rows = iota(m);
    do {
        UPoly minor = determinant_mod(c_->c.select(rows, comb), c_->w);
        if (sign_at(minor, a) != 0)
            return comb;
    } while (next_combination(comb, n));
    return std::nullopt;
}

const Certifier::Bordered& Certifier::bordered_for(const std::vector<std::size_t>& order) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = bordered_.find(order); it != bordered_.end())
            return it->second;
    }
    const UPolyMatrix& c = c_->c;
    const UPolyMatrix& h = h_.h;
    const std::size_t m = c.rows();
    const std::size_t n = h.rows();
    UPolyMatrix b(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            b(i, m + k) = c(i, order[k]);
            b(m + k, i) = c(i, order[k]);
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            b(m + k, m + l) = h(order[k], order[l]);

    Bordered entry;
    entry.columns = order;
    for (std::size_t k = 2 * m + 1; k <= m + n; ++k)
        entry.minors.push_back(determinant_mod(b.leading(k), h_.w));

    std::lock_guard lock(mutex_);
    return bordered_.emplace(order, std::move(entry)).first->second;
}

PdResult Certifier::pd_on_nullspace_at(const AlgebraicNumber& a) const
{
    if (!c_)
        return pd_at(a);
    auto pivots = pivot_columns(a);
    if (!pivots)
        throw ConstraintQualificationError("constraint qualification failed at root " + a.to_string() +
                                           ": the constraint Jacobian is rank deficient");
    const std::size_t n = h_.h.rows();
    std::vector<std::size_t> order = *pivots;
    for (std::size_t k = 0; k < n; ++k)
        if (std::find(pivots->begin(), pivots->end(), k) == pivots->end())
            order.push_back(k);

    const Bordered& bordered = bordered_for(order);
    const int expected = c_->c.rows() % 2 == 0 ? 1 : -1;
    PdResult r;
    r.positive = true;
    r.pivot_columns = *pivots;
    for (std::size_t k = 0; k < bordered.minors.size(); ++k) {
        int s = sign_at(bordered.minors[k], a);
        r.minor_signs.push_back(s);
        if (s == 0)
            r.degenerate = true;
        if (s != expected && !r.witness) {
            r.witness = k;
            r.positive = false;
        }
    }
    return r;
}

bool is_pd_at(const HessianCurve& hc, const AlgebraicNumber& a)
{
    return Certifier(hc).pd_at(a).positive;
}

bool is_pd_on_nullspace_at(const HessianCurve& hc, const JacobianCurve& cc, const AlgebraicNumber& a)
{
    return Certifier(hc, cc).pd_on_nullspace_at(a).positive;
}

bool det_nonvanishing_on_critical(const UPoly& det, const std::vector<AlgebraicNumber>& roots)
{
    for (const auto& a : roots)
        if (sign_at(det, a) == 0)
            return false;
    return true;
}

} // namespace polyloc
