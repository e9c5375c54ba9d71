#ifndef POLYLOC_CERTIFY_HPP
#define POLYLOC_CERTIFY_HPP

#include "polyloc/matrix.hpp"
#include "polyloc/realroots.hpp"
#include "polyloc/shape.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace polyloc {

// direct:    H(t) = Hess f at x(t) = A^{-1} v(t)
// congruent: H(t) = M^T (Hess f) M with M the leading block of A^{-1}, i.e. the
//            Hessian of f(A^{-1} y) in the transformed coordinates. C(t) becomes C M.
enum class HessianConvention { Direct, Congruent };

class ConstraintQualificationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

struct HessianCurve {
    UPolyMatrix h;
    UPoly w;
    HessianConvention convention = HessianConvention::Direct;
};

struct JacobianCurve {
    UPolyMatrix c;
    UPoly w;
};

// Hessian of f with respect to its first nx variables, evaluated along the
// representation; f may have fewer variables than rep (missing ones are appended).
HessianCurve hessian_curve(const MPoly& f, const UnivariateRep& rep, std::size_t nx,
                           HessianConvention convention = HessianConvention::Direct);

// Jacobian of the constraints with respect to the first nx variables.
JacobianCurve jacobian_curve(const std::vector<MPoly>& h, const UnivariateRep& rep, std::size_t nx,
                             HessianConvention convention = HessianConvention::Direct);

struct PdResult {
    bool positive = false;
    // Signs of the minors that were tested, in order.
    std::vector<int> minor_signs;
    // Index into minor_signs of the first sign that broke the pattern.
    std::optional<std::size_t> witness;
    // Some tested minor vanished.
    bool degenerate = false;
    // Columns of C moved to the front for the bordered test.
    std::vector<std::size_t> pivot_columns;
};

// Leading principal minors of H and of the bordered matrices, precomputed mod w
// and then sign-evaluated per root. Safe to call from several threads.
class Certifier {
public:
    explicit Certifier(HessianCurve h, std::optional<JacobianCurve> c = std::nullopt);

    const HessianCurve& hessian() const { return h_; }
    std::size_t constraints() const { return c_ ? c_->c.rows() : 0; }

    // Sylvester's criterion on H(a).
    PdResult pd_at(const AlgebraicNumber& a) const;
    // Bordered-determinant criterion on H(a) restricted to ker C(a); equals pd_at without constraints.
    PdResult pd_on_nullspace_at(const AlgebraicNumber& a) const;
    // det H(t) mod w.
    const UPoly& determinant() const;

private:
    struct Bordered {
        std::vector<std::size_t> columns;
        std::vector<UPoly> minors;
    };
    const Bordered& bordered_for(const std::vector<std::size_t>& order) const;
    std::optional<std::vector<std::size_t>> pivot_columns(const AlgebraicNumber& a) const;

    HessianCurve h_;
    std::optional<JacobianCurve> c_;
    std::vector<UPoly> leading_minors_;
    mutable std::mutex mutex_;
    mutable std::map<std::vector<std::size_t>, Bordered> bordered_;
};

bool is_pd_at(const HessianCurve& hc, const AlgebraicNumber& a);
bool is_pd_on_nullspace_at(const HessianCurve& hc, const JacobianCurve& cc, const AlgebraicNumber& a);

// sign_at(det, a) != 0 for every root.
bool det_nonvanishing_on_critical(const UPoly& det, const std::vector<AlgebraicNumber>& roots);

// Leading principal minors D_1..D_k of m, each reduced mod w.
std::vector<UPoly> leading_minors_mod(const UPolyMatrix& m, const UPoly& w);

} // namespace polyloc

#endif
