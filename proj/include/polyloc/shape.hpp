#ifndef POLYLOC_SHAPE_HPP
#define POLYLOC_SHAPE_HPP

#include "polyloc/groebner.hpp"
#include "polyloc/matrix.hpp"

#include <optional>
#include <vector>

namespace polyloc {

class PositiveDimensionalError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// y = A x with A = identity except for the first row (1, j, j^2, ..., j^{N-1}).
struct ChangeOfVariables {
    unsigned long j = 0;
    QMatrix a;
    QMatrix ainv;

    static ChangeOfVariables make(std::size_t nvars, unsigned long j);
};

struct ShapeBasis {
    UPoly w;
    // v[0] = t, v[i] = v_{i+1}
    std::vector<UPoly> v;
};

// Recognizes G = {w(x1), x2 - v2(x1), ..., xN - vN(x1)} for a reduced lex basis
// with x1 < ... < xN. The unit ideal is reported as w = 1 (no points).
std::optional<ShapeBasis> is_shape_position(const ReducedGB& g);

// Univariate representation of the finite variety of a polynomial system:
// V_C = { A^{-1} v(t) : w(t) = 0 }.
struct UnivariateRep {
    ChangeOfVariables cov;
    UPoly w;
    std::vector<UPoly> v;
    std::size_t nvars = 0;
    // Quotient dimensions of the source ideal and of its radical.
    std::size_t multiplicity_dimension = 0;
    std::size_t radical_dimension = 0;
    // Number of changes of variables tried (j = 0 .. attempts-1).
    std::size_t attempts = 0;

    // x(t) = A^{-1} v(t), each entry reduced mod w.
    std::vector<UPoly> point() const;
    // The reduced lex basis {w(y1), y2 - v2(y1), ...} of the transformed radical.
    ReducedGB lex_basis() const;
};

// Evaluates polynomials at a point whose coordinates are polynomials in t,
// reducing everything mod w. Powers of the coordinates are cached.
class PointEvaluator {
public:
    PointEvaluator(std::vector<UPoly> point, UPoly w);

    UPoly operator()(const MPoly& p) const;
    const UPoly& modulus() const { return w_; }
    const std::vector<UPoly>& point() const { return point_; }

private:
    const UPoly& power(std::size_t var, unsigned k) const;

    std::vector<UPoly> point_;
    UPoly w_;
    mutable std::vector<std::vector<UPoly>> powers_;
};

// Loops j = 0, 1, ... until the radical of the transformed ideal is in shape
// position. Throws PositiveDimensionalError when <gens> is not zero-dimensional.
UnivariateRep separating_representation(const std::vector<MPoly>& gens);

// Each generator vanishes identically at A^{-1} v(t) modulo w.
bool verify_representation(const std::vector<MPoly>& gens, const UnivariateRep& rep);

} // namespace polyloc

#endif
