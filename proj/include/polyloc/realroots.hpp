#ifndef POLYLOC_REALROOTS_HPP
#define POLYLOC_REALROOTS_HPP

#include "polyloc/rational.hpp"
#include "polyloc/upoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polyloc {

struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

Interval hull(const Interval& a, const Interval& b);

// Signed remainder sequence p, p', -rem(p, p'), ... with each entry scaled by a
// positive rational to keep coefficients small.
class SturmSequence {
public:
    explicit SturmSequence(const UPoly& p);

    const std::vector<UPoly>& polys() const { return seq_; }
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    // Distinct roots in (lo, hi] when neither endpoint is a root of gcd(p, p').
    int count(const Rational& lo, const Rational& hi) const;
    int count_all() const;

private:
    std::vector<UPoly> seq_;
};

// A real root of a squarefree polynomial together with an isolating interval.
class AlgebraicNumber {
public:
    AlgebraicNumber(UPoly defpoly, Interval iv);
    AlgebraicNumber(std::shared_ptr<const UPoly> defpoly, std::shared_ptr<const SturmSequence> sturm, Interval iv);

    const UPoly& defpoly() const { return *defpoly_; }
    const Interval& interval() const { return iv_; }
    const SturmSequence& sturm() const { return *sturm_; }
    double approx() const;

    // Halves (roughly) the isolating interval.
    void bisect();
    // Bisects until width <= max_width.
    void refine_to(const Rational& max_width);

    std::string to_string() const;

private:
    std::shared_ptr<const UPoly> defpoly_;
    std::shared_ptr<const SturmSequence> sturm_;
    Interval iv_;
};

// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
bool is_squarefree(const UPoly& p);

// Power of two strictly above the absolute value of every complex root.
Rational cauchy_bound(const UPoly& p);

// Sorted isolating intervals for the real roots of a squarefree w.
std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& w);

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

// Interval enclosure of g over iv (Horner in interval arithmetic).
Interval evaluate(const UPoly& g, const Interval& iv);

// Exact sign of g(a). The refining overload keeps the tightened interval.
int sign_at(const UPoly& g, const AlgebraicNumber& a);
int sign_at_refining(const UPoly& g, AlgebraicNumber& a);

// Enclosure of g(a) with width <= max_width (refines a as needed).
Interval enclose(const UPoly& g, AlgebraicNumber& a, const Rational& max_width);

// Exact rational value of g(a) if it has one with small height: checks the
// simplest rational inside a tight enclosure exactly.
std::optional<Rational> recognize_rational(const UPoly& g, AlgebraicNumber& a);

} // namespace polyloc

#endif
