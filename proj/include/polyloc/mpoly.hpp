#ifndef POLYLOC_MPOLY_HPP
#define POLYLOC_MPOLY_HPP

#include "polyloc/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace polyloc {

// Exponent vector of a monomial; length is the ambient variable count.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

    std::size_t nvars() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    unsigned long total_degree() const;
    bool is_one() const;

    // True iff this divides other.
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires divisor to divide *this.
    Monomial operator/(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

// Graded order, ties broken lexicographically with x1 > x2 > ...; largest first.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    MPoly(std::size_t nvars, const Rational& constant);

    static MPoly variable(std::size_t nvars, std::size_t index);
    static MPoly monomial(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    Degree total_degree() const;
    Degree degree_in(std::size_t var) const;

    // Adds c*m; drops the term when the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly& operator*=(const MPoly& other);
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    MPoly operator-() const;

    MPoly pow(unsigned exp) const;

    // Partial derivative with respect to variable var.
    MPoly derivative(std::size_t var) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;

    // f(images[0], ..., images[n-1]); every image shares one target nvars.
    MPoly compose(const std::vector<MPoly>& images) const;

    // Same polynomial viewed in a ring with more variables appended (or the
    // identity map when new_nvars == nvars).
    MPoly extend(std::size_t new_nvars) const;

    bool operator==(const MPoly& other) const;

private:
    void check_compatible(const MPoly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

// Exact quotient a / b; throws if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);

std::vector<MPoly> gradient(const MPoly& f);

} // namespace polyloc

#endif
