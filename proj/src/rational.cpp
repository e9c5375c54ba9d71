#include "polyloc/rational.hpp"

#include <cctype>

namespace polyloc {

std::string to_string(Degree d)
{
    return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value());
}

Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational { throw Error("malformed number '" + std::string(text) + "'"); };
    if (text.empty())
        return fail();

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num(text.substr(pos, slash - pos));
        std::string den(text.substr(slash + 1));
        auto digits_only = [](const std::string& s) {
            if (s.empty())
                return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    return false;
            return true;
        };
        if (!digits_only(num) || !digits_only(den))
            return fail();
        Integer d(den, 10);
        if (d == 0)
            throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
        Rational q(Integer(num, 10), d);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    std::string mantissa_digits;
    long frac_digits = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa_digits.push_back(c);
            any_digit = true;
            if (seen_point)
                ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit)
        return fail();

    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            return fail();
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size())
            return fail();
        for (; pos < text.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                return fail();
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > 100000)
                return fail();
        }
        if (exp_negative)
            exponent = -exponent;
    }

    Rational q{Integer(mantissa_digits, 10)};
    long shift = exponent - frac_digits;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        q *= ten_pow;
    else
        q /= ten_pow;
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

int sign(const Rational& q)
{
    return sgn(q);
}

Rational pow2(long k)
{
    Rational r(1);
    if (k >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
    return r;
}

Rational pow(const Rational& base, unsigned long exp)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi via continued fractions.
Rational simplest_nonnegative(const Rational& lo, const Rational& hi)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo)
        return lo;
    // An integer lies in (lo, hi]
    if (Rational(fl + 1) <= hi)
        return Rational(fl + 1);
    // Both in (fl, fl+1): recurse on reciprocals of fractional parts.
    Rational lo_frac = lo - fl;
    Rational hi_frac = hi - fl;
    Rational inner = simplest_nonnegative(1 / hi_frac, 1 / lo_frac);
    return Rational(fl) + 1 / inner;
}

} // namespace

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (lo > hi)
        throw Error("simplest_between: empty interval");
    if (lo <= 0 && hi >= 0)
        return Rational(0);
    if (lo > 0)
        return simplest_nonnegative(lo, hi);
    return -simplest_nonnegative(-hi, -lo);
}

double to_double(const Rational& q)
{
    // Truncates toward zero: within one ulp of q.
    return mpq_get_d(q.get_mpq_t());
}

Rational pow10(long k)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 1)
        throw PreconditionError("to_decimal needs at least one digit");
    if (q == 0)
        return "0";
    Rational a = abs(q);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (pow10(e) > a)
        --e;
    while (pow10(e + 1) <= a)
        ++e;

    Rational scaled = a * pow10(digits - 1 - e) + Rational(1, 2);
    Integer n = scaled.get_num() / scaled.get_den();
    if (n == pow10(digits).get_num()) {
        n /= 10;
        ++e;
    }
    std::string s = n.get_str();
    std::string out = q < 0 ? "-" : "";
    if (e >= -5 && e < digits) {
        if (e >= 0) {
            out += s.substr(0, static_cast<std::size_t>(e + 1));
            if (static_cast<long>(s.size()) > e + 1)
                out += "." + s.substr(static_cast<std::size_t>(e + 1));
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
        }
    } else {
        out += s.substr(0, 1);
        if (s.size() > 1)
            out += "." + s.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return out;
}

} // namespace polyloc
