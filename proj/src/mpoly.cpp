#include "polyloc/mpoly.hpp"

#include <algorithm>
#include <cmath>

namespace polyloc {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power)
{
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
}

unsigned long Monomial::total_degree() const
{
    unsigned long d = 0;
    for (auto e : exps_)
        d += e;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= divisor.exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

MPoly::MPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars)
{
    if (constant != 0)
        terms_.emplace(Monomial(nvars), constant);
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index)
{
    MPoly p(nvars);
    p.terms_.emplace(Monomial::variable(nvars, index), Rational(1));
    return p;
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c)
{
    MPoly p(m.nvars());
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_term() const
{
    return coefficient(Monomial(nvars_));
}

Rational MPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Degree MPoly::total_degree() const
{
    if (terms_.empty())
        return Degree::neg_inf();
    return Degree(static_cast<int>(terms_.begin()->first.total_degree()));
}

Degree MPoly::degree_in(std::size_t var) const
{
    if (terms_.empty())
        return Degree::neg_inf();
    Monomial::Exponent d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[var]);
    return Degree(static_cast<int>(d));
}

void MPoly::add_term(const Monomial& m, const Rational& c)
{
    if (m.nvars() != nvars_)
        throw DimensionError("monomial has " + std::to_string(m.nvars()) + " variables, polynomial has " +
                             std::to_string(nvars_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& other) const
{
    if (nvars_ != other.nvars_)
        throw DimensionError("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                             std::to_string(other.nvars_) + " variables");
}

MPoly& MPoly::operator+=(const MPoly& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    a.check_compatible(b);
    MPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& other)
{
    *this = *this * other;
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_)
        coef *= c;
    return *this;
}

MPoly MPoly::operator-() const
{
    MPoly r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

MPoly MPoly::pow(unsigned exp) const
{
    MPoly result(nvars_, Rational(1));
    MPoly base(*this);
    while (exp > 0) {
        if (exp & 1u)
            result *= base;
        exp >>= 1u;
        if (exp > 0)
            base *= base;
    }
    return result;
}

MPoly MPoly::derivative(std::size_t var) const
{
    if (var >= nvars_)
        throw DimensionError("derivative with respect to variable " + std::to_string(var + 1) + " of " +
                             std::to_string(nvars_));
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial dm(m);
        dm[var] -= 1;
        r.add_term(dm, c * m[var]);
    }
    return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != nvars_)
        throw DimensionError("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] != 0)
                term *= polyloc::pow(point[i], m[i]);
        sum += term;
    }
    return sum;
}

double MPoly::evaluate(const std::vector<double>& point) const
{
    if (point.size() != nvars_)
        throw DimensionError("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] != 0)
                term *= std::pow(point[i], static_cast<double>(m[i]));
        sum += term;
    }
    return sum;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const
{
    if (images.size() != nvars_)
        throw DimensionError("compose needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& img : images)
        if (img.nvars() != target)
            throw DimensionError("compose images live in different rings");

    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<MPoly>> powers(nvars_);
    auto power_of = [&](std::size_t i, unsigned k) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.emplace_back(target, Rational(1));
        while (cache.size() <= k)
            cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    MPoly r(target);
    for (const auto& [m, c] : terms_) {
        MPoly term(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] != 0)
                term *= power_of(i, m[i]);
        r += term;
    }
    return r;
}

MPoly MPoly::extend(std::size_t new_nvars) const
{
    if (new_nvars < nvars_)
        throw DimensionError("extend cannot drop variables");
    MPoly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        auto exps = m.exponents();
        exps.resize(new_nvars, 0);
        r.terms_.emplace(Monomial(std::move(exps)), c);
    }
    return r;
}

bool MPoly::operator==(const MPoly& other) const
{
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

MPoly exact_div(const MPoly& a, const MPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero("exact_div by the zero polynomial");
    if (a.nvars() != b.nvars())
        throw DimensionError("exact_div operands live in different rings");
    const auto& [lead_m, lead_c] = *b.terms().begin();
    MPoly quotient(a.nvars());
    MPoly rest(a);
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms().begin();
        if (!lead_m.divides(m))
            throw Error("exact_div: divisor does not divide dividend");
        MPoly step = MPoly::monomial(m / lead_m, c / lead_c);
        quotient += step;
        rest -= step * b;
    }
    return quotient;
}

std::vector<MPoly> gradient(const MPoly& f)
{
    std::vector<MPoly> g;
    g.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i)
        g.push_back(f.derivative(i));
    return g;
}

} // namespace polyloc
