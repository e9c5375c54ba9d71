#include "polyloc/shape.hpp"

#include "polyloc/realroots.hpp"

namespace polyloc {

ChangeOfVariables ChangeOfVariables::make(std::size_t nvars, unsigned long j)
{
    ChangeOfVariables cov;
    cov.j = j;
    cov.a = identity_matrix(nvars);
    Rational power(1);
    for (std::size_t k = 0; k < nvars; ++k) {
        cov.a(0, k) = power;
        power *= j;
    }
    cov.ainv = inverse(cov.a);
    if (!(cov.a * cov.ainv == identity_matrix(nvars)))
        throw Error("change of variables is not invertible");
    return cov;
}

namespace {

// Coefficients of a polynomial that only involves variable 0, as a UPoly.
std::optional<UPoly> as_univariate_in_first(const SortedPoly& p)
{
    std::vector<Rational> coeffs;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 1; i < t.monomial.nvars(); ++i)
            if (t.monomial[i] != 0)
                return std::nullopt;
        std::size_t k = t.monomial[0];
        if (coeffs.size() <= k)
            coeffs.resize(k + 1, Rational(0));
        coeffs[k] = t.coeff;
    }
    return UPoly(std::move(coeffs));
}

} // namespace

std::optional<ShapeBasis> is_shape_position(const ReducedGB& g)
{
    const std::size_t n = g.nvars();
    if (!(g.order() == MonomialOrder::lex(n)))
        return std::nullopt;
    if (g.is_unit()) {
        ShapeBasis s{UPoly(Rational(1)), std::vector<UPoly>(n)};
        s.v[0] = UPoly::identity();
        return s;
    }
    if (g.size() != n)
        return std::nullopt;
    const auto& basis = g.sorted();
    auto w = as_univariate_in_first(basis[0]);
    if (!w || w->degree() < 1)
        return std::nullopt;
    ShapeBasis s;
    s.w = *w;
    s.v.push_back(UPoly::identity());
    for (std::size_t i = 1; i < n; ++i) {
        const SortedPoly& gi = basis[i];
        if (gi.lead().monomial != Monomial::variable(n, i) || gi.lead().coeff != 1)
            return std::nullopt;
        std::vector<Term> tail(gi.terms().begin() + 1, gi.terms().end());
        auto rest = as_univariate_in_first(SortedPoly(std::move(tail)));
        if (!rest)
            return std::nullopt;
        s.v.push_back(-*rest);
    }
    return s;
}

std::vector<UPoly> UnivariateRep::point() const
{
    std::vector<UPoly> x(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        UPoly acc;
        for (std::size_t k = 0; k < nvars; ++k)
            if (cov.ainv(i, k) != 0)
                acc += v[k] * cov.ainv(i, k);
        x[i] = rem(acc, w);
    }
    return x;
}

ReducedGB UnivariateRep::lex_basis() const
{
    const auto order = MonomialOrder::lex(nvars);
    std::vector<SortedPoly> basis;
    SortedPoly wp(univariate_in(w, nvars, 0), order);
    wp.make_monic();
    basis.push_back(std::move(wp));
    for (std::size_t i = 1; i < nvars; ++i) {
        MPoly gi = MPoly::variable(nvars, i) - univariate_in(v[i], nvars, 0);
        basis.emplace_back(gi, order);
    }
    return ReducedGB(std::move(basis), order, nvars);
}

PointEvaluator::PointEvaluator(std::vector<UPoly> point, UPoly w)
    : point_(std::move(point)), w_(std::move(w)), powers_(point_.size())
{
}

const UPoly& PointEvaluator::power(std::size_t var, unsigned k) const
{
    auto& cache = powers_[var];
    if (cache.empty())
        cache.push_back(rem(UPoly(Rational(1)), w_));
    while (cache.size() <= k)
        cache.push_back(mulmod(cache.back(), point_[var], w_));
    return cache[k];
}

UPoly PointEvaluator::operator()(const MPoly& p) const
{
    if (p.nvars() != point_.size())
        throw DimensionError("evaluation point has " + std::to_string(point_.size()) + " coordinates, polynomial has " +
                             std::to_string(p.nvars()) + " variables");
    UPoly acc;
    for (const auto& [m, c] : p.terms()) {
        UPoly term(c);
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] != 0)
                term = mulmod(term, power(i, m[i]), w_);
        acc += term;
    }
    return rem(acc, w_);
}

namespace {

std::vector<MPoly> transform(const std::vector<MPoly>& gens, const ChangeOfVariables& cov)
{
    std::vector<MPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens)
        out.push_back(substitute_linear(g, cov.ainv));
    return out;
}

std::optional<UnivariateRep> try_shape(const ReducedGB& radical, const ChangeOfVariables& cov)
{
    const std::size_t n = radical.nvars();
    QuotientRing q(radical);
    const std::size_t dim = q.dimension();
    UnivariateRep rep;
    rep.cov = cov;
    rep.nvars = n;
    rep.radical_dimension = dim;
    if (dim == 0) {
        rep.w = UPoly(Rational(1));
        rep.v.assign(n, UPoly());
        rep.v[0] = UPoly::identity();
        return rep;
    }
    const MPoly y1 = MPoly::variable(n, 0);
    UPoly m = q.minimal_polynomial(y1);
    if (m.degree() != static_cast<int>(dim))
        return std::nullopt;
    rep.w = m;
    rep.v.push_back(UPoly::identity());
    for (std::size_t i = 1; i < n; ++i) {
        auto coeffs = q.express_in_powers(y1, MPoly::variable(n, i));
        if (coeffs.empty())
            throw Error("separating element does not generate the quotient ring");
        rep.v.push_back(rem(UPoly(std::move(coeffs)), rep.w));
    }
    return rep;
}

} // namespace

UnivariateRep separating_representation(const std::vector<MPoly>& gens)
{
    if (gens.empty())
        throw PreconditionError("separating_representation needs generators");
    const std::size_t n = gens.front().nvars();
    const auto grevlex = MonomialOrder::grevlex(n);

    ReducedGB base = buchberger(gens, grevlex);
    if (!is_zero_dimensional(base))
        throw PositiveDimensionalError("the critical ideal is not zero-dimensional");
    const std::size_t multiplicity_dim = quotient_basis(base).size();
    ReducedGB base_radical = radical_zero_dim(base);
    const std::size_t delta = quotient_basis(base_radical).size();
    const unsigned long bound = static_cast<unsigned long>((n - 1) * delta * (delta > 0 ? delta - 1 : 0) / 2);

    for (unsigned long j = 0; j <= bound + 1; ++j) {
        auto cov = ChangeOfVariables::make(n, j);
        ReducedGB radical = j == 0 ? base_radical : radical_zero_dim(buchberger(transform(gens, cov), grevlex));
        if (auto rep = try_shape(radical, cov)) {
            rep->multiplicity_dimension = multiplicity_dim;
            rep->attempts = j + 1;
            return *rep;
        }
    }
    throw Error("no separating change of variables within the iteration bound");
}

bool verify_representation(const std::vector<MPoly>& gens, const UnivariateRep& rep)
{
    PointEvaluator eval(rep.point(), rep.w);
    for (const auto& g : gens)
        if (!eval(g).is_zero())
            return false;
    return true;
}

} // namespace polyloc
