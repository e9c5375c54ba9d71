#ifndef POLYLOC_RATIONAL_HPP
#define POLYLOC_RATIONAL_HPP

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyloc {

// Exact rational in lowest terms (GMP keeps it canonical after every op).
using Rational = mpq_class;
using Integer = mpz_class;

// Base for all errors thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Degree of a polynomial; the zero polynomial has degree -infinity, which
// compares below every finite degree.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(int d) : value_(d) {}
    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const { return value_ == kNegInf; }
    // Throws for -inf; callers that may see a zero polynomial must check first.
    int value() const
    {
        if (is_neg_inf())
            throw Error("degree of the zero polynomial is -infinity");
        return value_;
    }

    constexpr auto operator<=>(const Degree&) const = default;
    constexpr bool operator==(const Degree&) const = default;
    constexpr auto operator<=>(int d) const { return value_ <=> d; }
    constexpr bool operator==(int d) const { return value_ == d; }

private:
    static constexpr int kNegInf = INT_MIN;
    int value_ = kNegInf;
};

std::string to_string(Degree d);

// Parses "12", "-3/4", "0.125", "1e-5", "2.5E3" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int sign(const Rational& q);

// 2^k as a rational, k may be negative.
Rational pow2(long k);

// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned long exp);

// Smallest-denominator rational in the closed interval [lo, hi] (Stern-Brocot).
Rational simplest_between(const Rational& lo, const Rational& hi);

double to_double(const Rational& q);

// 10^k as a rational, k may be negative.
Rational pow10(long k);

// q rounded half away from zero to `digits` significant decimals. Fixed notation
// for decimal exponents in [-5, digits), scientific otherwise.
std::string to_decimal(const Rational& q, int digits);

} // namespace polyloc

#endif
