#ifndef POLYLOC_GROEBNER_HPP
#define POLYLOC_GROEBNER_HPP

#include "polyloc/mpoly.hpp"
#include "polyloc/upoly.hpp"

#include <compare>
#include <map>
#include <vector>

namespace polyloc {

class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex };

    // Lex with x1 < x2 < ... < xn.
    static MonomialOrder lex(std::size_t nvars);
    // Degree reverse lex with the same variable ranking.
    static MonomialOrder grevlex(std::size_t nvars);
    // `ranking` lists variable indices from most to least significant.
    MonomialOrder(Kind kind, std::vector<std::size_t> ranking);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return ranking_.size(); }
    const std::vector<std::size_t>& ranking() const { return ranking_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;

private:
    Kind kind_;
    std::vector<std::size_t> ranking_;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Polynomial with terms sorted strictly decreasing in a monomial order.
class SortedPoly {
public:
    SortedPoly() = default;
    SortedPoly(const MPoly& p, const MonomialOrder& order);
    SortedPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term& lead() const { return terms_.front(); }
    const std::vector<Term>& terms() const { return terms_; }

    void make_monic();
    MPoly to_mpoly(std::size_t nvars) const;

    // this - c * m * g
    SortedPoly sub_scaled(const Rational& c, const Monomial& m, const SortedPoly& g,
                          const MonomialOrder& order) const;

private:
    std::vector<Term> terms_;
};

class ReducedGB {
public:
    ReducedGB(std::vector<SortedPoly> basis, MonomialOrder order, std::size_t nvars);

    const MonomialOrder& order() const { return order_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return basis_.size(); }
    bool empty() const { return basis_.empty(); }
    // True iff the ideal is the whole ring.
    bool is_unit() const;

    const std::vector<SortedPoly>& sorted() const { return basis_; }
    std::vector<MPoly> generators() const;
    std::vector<Monomial> leading_monomials() const;

private:
    std::vector<SortedPoly> basis_;
    MonomialOrder order_;
    std::size_t nvars_;
};

SortedPoly normal_form(const SortedPoly& p, const std::vector<SortedPoly>& divisors, const MonomialOrder& order);
MPoly normal_form(const MPoly& p, const ReducedGB& g);

SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g, const MonomialOrder& order);

ReducedGB buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order);

// Every S-polynomial reduces to zero and the basis is reduced and sorted.
bool satisfies_buchberger_criterion(const ReducedGB& g);
bool is_reduced(const ReducedGB& g);

bool is_zero_dimensional(const ReducedGB& g);

// Standard monomials, sorted increasing in the basis order.
std::vector<Monomial> quotient_basis(const ReducedGB& g);

// Linear algebra in Q[x]/I for a zero-dimensional I.
class QuotientRing {
public:
    explicit QuotientRing(ReducedGB g);

    const ReducedGB& basis_ideal() const { return gb_; }
    std::size_t dimension() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    // Coordinates of NF(p) on the standard monomials.
    std::vector<Rational> coordinates(const MPoly& p) const;
    std::vector<Rational> coordinates(const SortedPoly& reduced) const;
    MPoly from_coordinates(const std::vector<Rational>& coords) const;

    // Monic least-degree m with m(p) in I.
    UPoly minimal_polynomial(const MPoly& p) const;

    // Coefficients c_0..c_{d-1} with NF(target) = sum c_k NF(p^k) where d = dim;
    // empty when 1, p, ..., p^{d-1} are linearly dependent.
    std::vector<Rational> express_in_powers(const MPoly& p, const MPoly& target) const;

private:
    ReducedGB gb_;
    std::vector<Monomial> monomials_;
    std::map<std::vector<Monomial::Exponent>, std::size_t> index_;
};

UPoly minimal_polynomial(const ReducedGB& g, std::size_t var);

// rad(<G>) for zero-dimensional <G>, by adjoining squarefree parts of the
// per-variable minimal polynomials (Seidenberg).
ReducedGB radical_zero_dim(const ReducedGB& g);

// p(x_var) as an MPoly in nvars variables.
MPoly univariate_in(const UPoly& p, std::size_t nvars, std::size_t var);

} // namespace polyloc

#endif
