#include "polyloc/upoly.hpp"

#include <algorithm>

namespace polyloc {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UPoly::UPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

UPoly::UPoly(const Rational& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

UPoly UPoly::monomial(unsigned degree, const Rational& c)
{
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return UPoly(std::move(coeffs));
}

const Rational& UPoly::leading_coeff() const
{
    if (coeffs_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return UPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::operator-() const
{
    UPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

UPoly UPoly::pow(unsigned exp) const
{
    UPoly result(Rational(1));
    UPoly base(*this);
    while (exp > 0) {
        if (exp & 1u)
            result = result * base;
        exp >>= 1u;
        if (exp > 0)
            base = base * base;
    }
    return result;
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return UPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * Rational(1 / leading_coeff());
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double UPoly::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

UPoly UPoly::compose(const UPoly& q) const
{
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + UPoly(*it);
    return acc;
}

std::pair<UPoly, UPoly> univ_divmod(const UPoly& p, const UPoly& w)
{
    if (w.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = p.coeffs();
    const auto& wc = w.coeffs();
    const std::size_t dw = wc.size() - 1;
    if (r.size() <= dw)
        return {UPoly(), p};
    std::vector<Rational> q(r.size() - dw, Rational(0));
    Rational inv_lead = 1 / wc.back();
    for (std::size_t k = r.size(); k-- > dw;) {
        if (r[k] == 0)
            continue;
        Rational factor = r[k] * inv_lead;
        q[k - dw] = factor;
        for (std::size_t i = 0; i <= dw; ++i)
            r[k - dw + i] -= factor * wc[i];
    }
    r.resize(dw);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& p, const UPoly& w)
{
    if (p.degree() < w.degree())
        return p;
    return univ_divmod(p, w).second;
}

UPoly exact_div(const UPoly& p, const UPoly& w)
{
    auto [q, r] = univ_divmod(p, w);
    if (!r.is_zero())
        throw Error("exact_div: nonzero remainder");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a.monic();
    UPoly y = b.monic();
    while (!y.is_zero()) {
        UPoly r = rem(x, y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& w)
{
    return rem(a * b, w);
}

} // namespace polyloc
