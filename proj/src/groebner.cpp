#include "polyloc/groebner.hpp"

#include "polyloc/realroots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace polyloc {

MonomialOrder MonomialOrder::lex(std::size_t nvars)
{
    std::vector<std::size_t> ranking(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        ranking[i] = nvars - 1 - i;
    return MonomialOrder(Kind::Lex, std::move(ranking));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars)
{
    MonomialOrder o = lex(nvars);
    o.kind_ = Kind::GrevLex;
    return o;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> ranking) : kind_(kind), ranking_(std::move(ranking))
{
    std::vector<std::size_t> check(ranking_);
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != i)
            throw Error("monomial order ranking is not a permutation");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (kind_ == Kind::Lex) {
        for (std::size_t v : ranking_)
            if (a[v] != b[v])
                return a[v] <=> b[v];
        return std::strong_ordering::equal;
    }
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db)
        return da <=> db;
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
        if (a[*it] != b[*it])
            return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
}

SortedPoly::SortedPoly(const MPoly& p, const MonomialOrder& order)
{
    terms_.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        terms_.push_back({m, c});
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
}

void SortedPoly::make_monic()
{
    if (terms_.empty() || terms_.front().coeff == 1)
        return;
    Rational inv = 1 / terms_.front().coeff;
    for (auto& t : terms_)
        t.coeff *= inv;
}

MPoly SortedPoly::to_mpoly(std::size_t nvars) const
{
    MPoly p(nvars);
    for (const auto& t : terms_)
        p.add_term(t.monomial, t.coeff);
    return p;
}

SortedPoly SortedPoly::sub_scaled(const Rational& c, const Monomial& m, const SortedPoly& g,
                                  const MonomialOrder& order) const
{
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial shifted;
    bool have_shifted = false;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size() && !have_shifted) {
            shifted = g.terms_[j].monomial * m;
            have_shifted = true;
        }
        if (j >= g.terms_.size()) {
            out.push_back(terms_[i++]);
            continue;
        }
        if (i >= terms_.size()) {
            out.push_back({std::move(shifted), -c * g.terms_[j].coeff});
            ++j;
            have_shifted = false;
            continue;
        }
        auto cmp = order.compare(terms_[i].monomial, shifted);
        if (cmp > 0) {
            out.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(shifted), -c * g.terms_[j].coeff});
            ++j;
            have_shifted = false;
        } else {
            Rational sum = terms_[i].coeff - c * g.terms_[j].coeff;
            if (sum != 0)
                out.push_back({terms_[i].monomial, std::move(sum)});
            ++i;
            ++j;
            have_shifted = false;
        }
    }
    return SortedPoly(std::move(out));
}

ReducedGB::ReducedGB(std::vector<SortedPoly> basis, MonomialOrder order, std::size_t nvars)
    : basis_(std::move(basis)), order_(std::move(order)), nvars_(nvars)
{
}

bool ReducedGB::is_unit() const
{
    return basis_.size() == 1 && basis_.front().lead().monomial.is_one();
}

std::vector<MPoly> ReducedGB::generators() const
{
    std::vector<MPoly> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_)
        out.push_back(g.to_mpoly(nvars_));
    return out;
}

std::vector<Monomial> ReducedGB::leading_monomials() const
{
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_)
        out.push_back(g.lead().monomial);
    return out;
}

namespace {
SortedPoly reduce_fully(const SortedPoly& p, const std::vector<const SortedPoly*>& divisors,
                        const MonomialOrder& order);
}

SortedPoly normal_form(const SortedPoly& p, const std::vector<SortedPoly>& divisors, const MonomialOrder& order)
{
    std::vector<const SortedPoly*> ptrs;
    ptrs.reserve(divisors.size());
    for (const auto& g : divisors)
        ptrs.push_back(&g);
    return reduce_fully(p, ptrs, order);
}

MPoly normal_form(const MPoly& p, const ReducedGB& g)
{
    if (p.nvars() != g.nvars())
        throw DimensionError("normal_form: polynomial and basis live in different rings");
    return normal_form(SortedPoly(p, g.order()), g.sorted(), g.order()).to_mpoly(g.nvars());
}

SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g, const MonomialOrder& order)
{
    const Monomial l = f.lead().monomial.lcm(g.lead().monomial);
    // (l/lm f)/lc f * f - (l/lm g)/lc g * g
    SortedPoly scaled_f = SortedPoly().sub_scaled(Rational(-1) / f.lead().coeff, l / f.lead().monomial, f, order);
    return scaled_f.sub_scaled(Rational(1) / g.lead().coeff, l / g.lead().monomial, g, order);
}

namespace {

// Full reduction that leaves irreducible terms in place and moves past them.
SortedPoly reduce_fully(const SortedPoly& p, const std::vector<const SortedPoly*>& divisors,
                        const MonomialOrder& order)
{
    SortedPoly work(p);
    std::size_t skip = 0;
    while (skip < work.size()) {
        const Term& lt = work.terms()[skip];
        const SortedPoly* divisor = nullptr;
        for (const auto* g : divisors) {
            if (g->lead().monomial.divides(lt.monomial)) {
                divisor = g;
                break;
            }
        }
        if (divisor == nullptr) {
            ++skip;
            continue;
        }
        Rational c = lt.coeff / divisor->lead().coeff;
        Monomial m = lt.monomial / divisor->lead().monomial;
        // Terms before `skip` are irreducible and strictly larger than the
        // shifted divisor, so subtracting leaves them untouched.
        work = work.sub_scaled(c, m, *divisor, order);
    }
    return work;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned long degree;
};

class BuchbergerState {
public:
    BuchbergerState(const MonomialOrder& order, std::size_t nvars) : order_(order), nvars_(nvars) {}

    void add(SortedPoly h)
    {
        h.make_monic();
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        active_.push_back(true);
        update(hi);
    }

    bool has_pairs() const { return !pairs_.empty(); }

    Pair pop_pair()
    {
        // Normal strategy: smallest lcm degree, then smallest lcm in the order.
        auto best = pairs_.begin();
        for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
            if (it->degree < best->degree ||
                (it->degree == best->degree && order_.compare(it->lcm, best->lcm) < 0))
                best = it;
        }
        Pair p = *best;
        pairs_.erase(best);
        return p;
    }

    SortedPoly reduce(const SortedPoly& p) const
    {
        std::vector<const SortedPoly*> divisors;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k])
                divisors.push_back(&polys_[k]);
        return reduce_fully(p, divisors, order_);
    }

    const SortedPoly& poly(std::size_t k) const { return polys_[k]; }

    std::vector<SortedPoly> reduced_basis() const
    {
        std::vector<SortedPoly> minimal;
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (!active_[k])
                continue;
            bool redundant = false;
            for (std::size_t l = 0; l < polys_.size() && !redundant; ++l) {
                if (l == k || !active_[l])
                    continue;
                const auto& lk = polys_[k].lead().monomial;
                const auto& ll = polys_[l].lead().monomial;
                if (ll.divides(lk) && (ll != lk || l < k))
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(polys_[k]);
        }
        std::vector<SortedPoly> reduced;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<const SortedPoly*> others;
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k)
                    others.push_back(&minimal[l]);
            // Leading term is irreducible by the others; reduce the tail only.
            std::vector<Term> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
            SortedPoly reduced_tail = reduce_fully(SortedPoly(std::move(tail)), others, order_);
            std::vector<Term> terms;
            terms.push_back(minimal[k].lead());
            terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
            SortedPoly g(std::move(terms));
            g.make_monic();
            reduced.push_back(std::move(g));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const SortedPoly& a, const SortedPoly& b) {
            return order_.compare(a.lead().monomial, b.lead().monomial) < 0;
        });
        return reduced;
    }

private:
    // Gebauer-Moeller installation of the new element h.
    void update(std::size_t h)
    {
        const Monomial& lh = polys_[h].lead().monomial;

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < h; ++g)
            if (active_[g]) {
                Monomial l = lh.lcm(polys_[g].lead().monomial);
                auto d = l.total_degree();
                candidates.push_back({g, h, std::move(l), d});
            }

        // Chain criterion among new pairs: drop (g1, h) when some other new
        // pair's lcm properly divides it; keep one representative per lcm.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool coprime = polys_[p.i].lead().monomial.coprime(lh);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
                    if (a == b)
                        continue;
                    const Pair& q = candidates[b];
                    if (q.lcm.divides(p.lcm) && (q.lcm != p.lcm || b < a))
                        dominated = true;
                }
            }
            if (!dominated)
                kept.push_back(p);
        }
        // Product criterion: pairs with coprime leading monomials reduce to zero.
        std::vector<Pair> fresh;
        for (auto& p : kept)
            if (!polys_[p.i].lead().monomial.coprime(lh))
                fresh.push_back(std::move(p));

        // Old pairs whose lcm is divisible by lm(h) with a strictly smaller chain.
        std::vector<Pair> survivors;
        for (auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && lh.lcm(polys_[p.i].lead().monomial) != p.lcm &&
                        lh.lcm(polys_[p.j].lead().monomial) != p.lcm;
            if (!drop)
                survivors.push_back(std::move(p));
        }
        pairs_ = std::move(survivors);
        for (auto& p : fresh)
            pairs_.push_back(std::move(p));

        for (std::size_t g = 0; g < h; ++g)
            if (active_[g] && lh.divides(polys_[g].lead().monomial))
                active_[g] = false;
    }

    const MonomialOrder& order_;
    std::size_t nvars_;
    std::vector<SortedPoly> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

} // namespace

ReducedGB buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order)
{
    if (gens.empty())
        throw PreconditionError("buchberger needs at least one generator");
    const std::size_t nvars = gens.front().nvars();
    if (order.nvars() != nvars)
        throw DimensionError("monomial order and generators disagree on the number of variables");
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw DimensionError("generators live in different rings");

    BuchbergerState state(order, nvars);
    // Insert generators after mutual reduction, smallest leading term first.
    std::vector<SortedPoly> inputs;
    for (const auto& g : gens)
        if (!g.is_zero())
            inputs.emplace_back(g, order);
    std::sort(inputs.begin(), inputs.end(), [&](const SortedPoly& a, const SortedPoly& b) {
        return order.compare(a.lead().monomial, b.lead().monomial) < 0;
    });
    for (const auto& p : inputs) {
        SortedPoly r = state.reduce(p);
        if (!r.is_zero())
            state.add(std::move(r));
    }

    while (state.has_pairs()) {
        Pair pair = state.pop_pair();
        SortedPoly s = s_polynomial(state.poly(pair.i), state.poly(pair.j), order);
        SortedPoly h = state.reduce(s);
        if (!h.is_zero())
            state.add(std::move(h));
    }
    return ReducedGB(state.reduced_basis(), order, nvars);
}

bool satisfies_buchberger_criterion(const ReducedGB& g)
{
    const auto& basis = g.sorted();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            SortedPoly s = s_polynomial(basis[i], basis[j], g.order());
            if (!normal_form(s, basis, g.order()).is_zero())
                return false;
        }
    return true;
}

bool is_reduced(const ReducedGB& g)
{
    const auto& basis = g.sorted();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero() || basis[i].lead().coeff != 1)
            return false;
        for (std::size_t k = 0; k + 1 < basis[i].size(); ++k)
            if (g.order().compare(basis[i].terms()[k].monomial, basis[i].terms()[k + 1].monomial) <= 0)
                return false;
        if (i > 0 && g.order().compare(basis[i - 1].lead().monomial, basis[i].lead().monomial) >= 0)
            return false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& t : basis[i].terms())
                if (basis[j].lead().monomial.divides(t.monomial))
                    return false;
        }
    }
    return true;
}

bool is_zero_dimensional(const ReducedGB& g)
{
    if (g.empty())
        return g.nvars() == 0;
    if (g.is_unit())
        return true;
    std::vector<bool> has_pure_power(g.nvars(), false);
    for (const auto& m : g.leading_monomials()) {
        std::size_t support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] != 0) {
                ++support;
                var = i;
            }
        if (support == 1)
            has_pure_power[var] = true;
    }
    return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

std::vector<Monomial> quotient_basis(const ReducedGB& g)
{
    if (!is_zero_dimensional(g))
        throw PreconditionError("quotient basis of a positive-dimensional ideal is infinite");
    const auto leads = g.leading_monomials();
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> out;
    if (g.is_unit())
        return out;
    std::set<std::vector<Monomial::Exponent>> seen;
    std::deque<Monomial> frontier{Monomial(g.nvars())};
    seen.insert(frontier.front().exponents());
    while (!frontier.empty()) {
        Monomial m = std::move(frontier.front());
        frontier.pop_front();
        out.push_back(m);
        for (std::size_t v = 0; v < g.nvars(); ++v) {
            Monomial next = m;
            next[v] += 1;
            if (seen.count(next.exponents()) || !standard(next))
                continue;
            seen.insert(next.exponents());
            frontier.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return g.order().compare(a, b) < 0; });
    return out;
}

QuotientRing::QuotientRing(ReducedGB g) : gb_(std::move(g)), monomials_(quotient_basis(gb_))
{
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i].exponents(), i);
}

std::vector<Rational> QuotientRing::coordinates(const SortedPoly& reduced) const
{
    std::vector<Rational> out(monomials_.size(), Rational(0));
    for (const auto& t : reduced.terms()) {
        auto it = index_.find(t.monomial.exponents());
        if (it == index_.end())
            throw Error("coordinates: polynomial is not in normal form");
        out[it->second] = t.coeff;
    }
    return out;
}

std::vector<Rational> QuotientRing::coordinates(const MPoly& p) const
{
    return coordinates(normal_form(SortedPoly(p, gb_.order()), gb_.sorted(), gb_.order()));
}

MPoly QuotientRing::from_coordinates(const std::vector<Rational>& coords) const
{
    MPoly p(gb_.nvars());
    for (std::size_t i = 0; i < coords.size(); ++i)
        p.add_term(monomials_[i], coords[i]);
    return p;
}

namespace {

// Incremental row echelon form that remembers how each stored row combines the
// vectors inserted so far.
class DependencyFinder {
public:
    explicit DependencyFinder(std::size_t dim) : dim_(dim) {}

    // Inserts vector number `count()`; returns the combination (over inserted
    // vectors, including the new one with coefficient 1) when it is dependent.
    std::vector<Rational> insert(std::vector<Rational> v)
    {
        const std::size_t idx = inserted_++;
        std::vector<Rational> combo(idx + 1, Rational(0));
        combo[idx] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t piv = pivots_[r];
            if (v[piv] == 0)
                continue;
            Rational factor = v[piv];
            for (std::size_t k = 0; k < dim_; ++k)
                if (rows_[r][k] != 0)
                    v[k] -= factor * rows_[r][k];
            for (std::size_t k = 0; k < combos_[r].size(); ++k)
                if (combos_[r][k] != 0)
                    combo[k] -= factor * combos_[r][k];
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv] == 0)
            ++piv;
        if (piv == dim_)
            return combo;
        Rational inv = 1 / v[piv];
        for (auto& x : v)
            x *= inv;
        for (auto& x : combo)
            x *= inv;
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        pivots_.push_back(piv);
        return {};
    }

    std::size_t count() const { return inserted_; }

private:
    std::size_t dim_;
    std::size_t inserted_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::vector<Rational>> combos_;
    std::vector<std::size_t> pivots_;
};

} // namespace

UPoly QuotientRing::minimal_polynomial(const MPoly& p) const
{
    const auto& order = gb_.order();
    const SortedPoly sp(p, order);
    DependencyFinder finder(dimension());
    SortedPoly power = normal_form(SortedPoly(MPoly(gb_.nvars(), Rational(1)), order), gb_.sorted(), order);
    while (true) {
        auto dependency = finder.insert(coordinates(power));
        if (!dependency.empty())
            return UPoly(std::move(dependency)).monic();
        if (finder.count() > dimension() + 1)
            throw Error("minimal_polynomial: no dependency found within the quotient dimension");
        // next power: NF(p * NF(p^k))
        MPoly prod = power.to_mpoly(gb_.nvars()) * p;
        power = normal_form(SortedPoly(prod, order), gb_.sorted(), order);
    }
}

std::vector<Rational> QuotientRing::express_in_powers(const MPoly& p, const MPoly& target) const
{
    const std::size_t d = dimension();
    const auto& order = gb_.order();
    // Columns: NF(p^k), k < d. Solve sum c_k col_k = NF(target) by elimination.
    std::vector<std::vector<Rational>> cols;
    SortedPoly power = normal_form(SortedPoly(MPoly(gb_.nvars(), Rational(1)), order), gb_.sorted(), order);
    for (std::size_t k = 0; k < d; ++k) {
        cols.push_back(coordinates(power));
        if (k + 1 < d) {
            MPoly prod = power.to_mpoly(gb_.nvars()) * p;
            power = normal_form(SortedPoly(prod, order), gb_.sorted(), order);
        }
    }
    std::vector<Rational> rhs = coordinates(target);
    // Augmented system M c = rhs with M[row][k] = cols[k][row].
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k)
            m[r][k] = cols[k][r];
        m[r][d] = rhs[r];
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0)
            ++piv;
        if (piv == d)
            return {};
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t k = col; k <= d; ++k)
            m[col][k] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t k = col; k <= d; ++k)
                m[r][k] -= factor * m[col][k];
        }
    }
    std::vector<Rational> out(d);
    for (std::size_t r = 0; r < d; ++r)
        out[r] = m[r][d];
    return out;
}

UPoly minimal_polynomial(const ReducedGB& g, std::size_t var)
{
    if (var >= g.nvars())
        throw DimensionError("minimal_polynomial: variable index out of range");
    QuotientRing q(g);
    return q.minimal_polynomial(MPoly::variable(g.nvars(), var));
}

MPoly univariate_in(const UPoly& p, std::size_t nvars, std::size_t var)
{
    MPoly out(nvars);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        out.add_term(Monomial::variable(nvars, var, static_cast<Monomial::Exponent>(k)), p.coeffs()[k]);
    return out;
}

ReducedGB radical_zero_dim(const ReducedGB& g)
{
    if (!is_zero_dimensional(g))
        throw PreconditionError("radical_zero_dim: ideal is not zero-dimensional");
    if (g.is_unit())
        return g;
    QuotientRing q(g);
    std::vector<MPoly> gens = g.generators();
    bool changed = false;
    for (std::size_t v = 0; v < g.nvars(); ++v) {
        UPoly m = q.minimal_polynomial(MPoly::variable(g.nvars(), v));
        UPoly sf = squarefree_part(m);
        if (sf.degree() < m.degree()) {
            gens.push_back(univariate_in(sf, g.nvars(), v));
            changed = true;
        }
    }
    if (!changed)
        return g;
    return buchberger(gens, g.order());
}

} // namespace polyloc
