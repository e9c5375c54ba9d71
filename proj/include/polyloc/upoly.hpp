#ifndef POLYLOC_UPOLY_HPP
#define POLYLOC_UPOLY_HPP

#include "polyloc/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace polyloc {

// Dense univariate polynomial over Q; coeffs[k] multiplies t^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<long> coeffs);
    explicit UPoly(const Rational& constant);

    static UPoly monomial(unsigned degree, const Rational& c = Rational(1));
    // t
    static UPoly identity() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const
    {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of t^k, zero past the end.
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading_coeff() const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const Rational& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
    UPoly operator-() const;

    UPoly pow(unsigned exp) const;
    UPoly derivative() const;
    UPoly monic() const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;
    int sign_at(const Rational& x) const { return sgn(evaluate(x)); }

    // p(q(t))
    UPoly compose(const UPoly& q) const;

    bool operator==(const UPoly&) const = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// p = q*w + r with deg r < deg w.
std::pair<UPoly, UPoly> univ_divmod(const UPoly& p, const UPoly& w);
UPoly rem(const UPoly& p, const UPoly& w);
// Exact quotient; throws when the remainder is nonzero.
UPoly exact_div(const UPoly& p, const UPoly& w);
// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
// (a * b) mod w
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& w);

} // namespace polyloc

#endif
