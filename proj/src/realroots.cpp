#include "polyloc/realroots.hpp"

#include "polyloc/parse.hpp"

#include <algorithm>

namespace polyloc {

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

// Scale by 1/|lc| so the leading coefficient is +-1; sign pattern is unchanged.
UPoly normalize_positive(const UPoly& p)
{
    if (p.is_zero())
        return p;
    Rational scale = 1 / abs(p.leading_coeff());
    return p * scale;
}

int count_variations(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

SturmSequence::SturmSequence(const UPoly& p)
{
    if (p.is_zero())
        throw PreconditionError("Sturm sequence of the zero polynomial");
    seq_.push_back(normalize_positive(p));
    UPoly d = p.derivative();
    if (d.is_zero())
        return;
    seq_.push_back(normalize_positive(d));
    while (true) {
        UPoly r = rem(seq_[seq_.size() - 2], seq_.back());
        if (r.is_zero())
            break;
        seq_.push_back(normalize_positive(-r));
    }
}

int SturmSequence::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& q : seq_)
        signs.push_back(q.sign_at(x));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const
{
    std::vector<int> signs;
    for (const auto& q : seq_) {
        int s = sgn(q.leading_coeff());
        signs.push_back(q.degree().value() % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const
{
    std::vector<int> signs;
    for (const auto& q : seq_)
        signs.push_back(sgn(q.leading_coeff()));
    return count_variations(signs);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const
{
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const
{
    return variations_at_neg_inf() - variations_at_pos_inf();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.is_zero())
        throw PreconditionError("squarefree part of the zero polynomial");
    UPoly g = gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

bool is_squarefree(const UPoly& p)
{
    if (p.is_zero())
        return false;
    return gcd(p, p.derivative()).degree() <= 0;
}

Rational cauchy_bound(const UPoly& p)
{
    if (p.is_zero())
        throw PreconditionError("root bound of the zero polynomial");
    const Rational lc = abs(p.leading_coeff());
    Rational m(0);
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k)
        m = std::max(m, Rational(abs(p.coeffs()[k]) / lc));
    Rational bound = 1 + m;
    Rational pw(1);
    while (pw <= bound)
        pw *= 2;
    return pw;
}

AlgebraicNumber::AlgebraicNumber(UPoly defpoly, Interval iv)
    : defpoly_(std::make_shared<const UPoly>(std::move(defpoly))),
      sturm_(std::make_shared<const SturmSequence>(*defpoly_)), iv_(std::move(iv))
{
    if (iv_.lo > iv_.hi)
        throw PreconditionError("isolating interval is empty");
    if (defpoly_->sign_at(iv_.lo) == 0 || defpoly_->sign_at(iv_.hi) == 0)
        throw PreconditionError("isolating interval endpoint is a root");
    if (sturm_->count(iv_.lo, iv_.hi) != 1)
        throw PreconditionError("interval does not isolate exactly one root");
}

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const UPoly> defpoly, std::shared_ptr<const SturmSequence> sturm,
                                 Interval iv)
    : defpoly_(std::move(defpoly)), sturm_(std::move(sturm)), iv_(std::move(iv))
{
}

double AlgebraicNumber::approx() const
{
    return to_double(iv_.midpoint());
}

namespace {

// A split point inside (lo, hi) that is not a root of p: the midpoint, or a
// nearby dyadic offset when the midpoint happens to be a root.
Rational split_point(const UPoly& p, const Interval& iv)
{
    Rational mid = iv.midpoint();
    if (p.sign_at(mid) != 0)
        return mid;
    Rational w = iv.width();
    for (long k = 3;; ++k) {
        Rational off = w * pow2(-k);
        if (p.sign_at(mid + off) != 0)
            return mid + off;
        if (p.sign_at(mid - off) != 0)
            return mid - off;
    }
}

} // namespace

void AlgebraicNumber::bisect()
{
    const UPoly& p = *defpoly_;
    Rational s = split_point(p, iv_);
    // Simple root: p changes sign across it.
    if (p.sign_at(iv_.lo) != p.sign_at(s))
        iv_.hi = s;
    else
        iv_.lo = s;
}

void AlgebraicNumber::refine_to(const Rational& max_width)
{
    if (max_width <= 0)
        throw PreconditionError("refinement width must be positive");
    while (iv_.width() > max_width)
        bisect();
}

std::string AlgebraicNumber::to_string() const
{
    return "root of " + polyloc::to_string(*defpoly_) + " in [" + iv_.lo.get_str() + ", " + iv_.hi.get_str() + "]";
}

std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& w)
{
    if (w.is_zero())
        throw PreconditionError("cannot isolate roots of the zero polynomial");
    if (!is_squarefree(w))
        throw PreconditionError("isolate_real_roots needs a squarefree polynomial");
    auto defpoly = std::make_shared<const UPoly>(w);
    auto sturm = std::make_shared<const SturmSequence>(w);
    std::vector<AlgebraicNumber> roots;
    if (w.degree() == 0)
        return roots;

    const Rational bound = cauchy_bound(w);
    const int total = sturm->count_all();
    const int inside = sturm->count(-bound, bound);
    if (total != inside)
        throw Error("Sturm count mismatch between root bound interval and the real line");

    struct Pending {
        Interval iv;
        int count;
    };
    std::vector<Pending> stack{{{-bound, bound}, inside}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0)
            continue;
        if (cur.count == 1) {
            roots.emplace_back(defpoly, sturm, cur.iv);
            continue;
        }
        Rational s = split_point(w, cur.iv);
        int left = sturm->count(cur.iv.lo, s);
        stack.push_back({{s, cur.iv.hi}, cur.count - left});
        stack.push_back({{cur.iv.lo, s}, left});
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.interval().lo < b.interval().lo; });
    return roots;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width)
{
    AlgebraicNumber out(a);
    out.refine_to(width);
    return out;
}

Interval evaluate(const UPoly& g, const Interval& iv)
{
    if (g.is_zero())
        return {Rational(0), Rational(0)};
    const auto& cs = g.coeffs();
    Rational lo = cs.back();
    Rational hi = cs.back();
    for (std::size_t k = cs.size() - 1; k-- > 0;) {
        Rational a = lo * iv.lo;
        Rational b = lo * iv.hi;
        Rational c = hi * iv.lo;
        Rational d = hi * iv.hi;
        lo = std::min({a, b, c, d}) + cs[k];
        hi = std::max({a, b, c, d}) + cs[k];
    }
    return {lo, hi};
}

int sign_at_refining(const UPoly& g, AlgebraicNumber& a)
{
    UPoly reduced = rem(g, a.defpoly());
    if (reduced.is_zero())
        return 0;
    UPoly common = gcd(a.defpoly(), reduced);
    if (common.degree() >= 1) {
        SturmSequence s(common);
        if (s.count(a.interval().lo, a.interval().hi) > 0)
            return 0;
    }
    while (true) {
        Interval value = evaluate(reduced, a.interval());
        if (value.lo > 0)
            return 1;
        if (value.hi < 0)
            return -1;
        a.bisect();
    }
}

int sign_at(const UPoly& g, const AlgebraicNumber& a)
{
    AlgebraicNumber copy(a);
    return sign_at_refining(g, copy);
}

Interval enclose(const UPoly& g, AlgebraicNumber& a, const Rational& max_width)
{
    UPoly reduced = rem(g, a.defpoly());
    while (true) {
        Interval value = evaluate(reduced, a.interval());
        if (value.width() <= max_width)
            return value;
        a.bisect();
    }
}

std::optional<Rational> recognize_rational(const UPoly& g, AlgebraicNumber& a)
{
    Interval value = enclose(g, a, pow2(-100));
    Rational candidate = simplest_between(value.lo, value.hi);
    if (sign_at_refining(g - UPoly(candidate), a) == 0)
        return candidate;
    return std::nullopt;
}

} // namespace polyloc
