#include "polyloc/solve.hpp"

#include "polyloc/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace polyloc {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Ok:
        return "ok";
    case Status::PreconditionFailed:
        return "precondition_failed";
    case Status::PositiveDimensional:
        return "positive_dimensional";
    }
    return "unknown";
}

std::string to_string(RootClass c)
{
    switch (c) {
    case RootClass::Minimizer:
        return "minimizer";
    case RootClass::NotMinimizer:
        return "not_minimizer";
    case RootClass::Undecided:
        return "undecided";
    case RootClass::ConstraintQualificationFailed:
        return "constraint_qualification_failed";
    }
    return "unknown";
}

Lagrangian build_lagrangian(const MPoly& f, const std::vector<MPoly>& h)
{
    const std::size_t n = f.nvars();
    const std::size_t m = h.size();
    if (m == 0)
        throw PreconditionError("no constraints: the unconstrained solver applies");
    if (m >= n)
        throw PreconditionError(std::to_string(m) + " constraints in " + std::to_string(n) +
                                " variables: need fewer constraints than variables");
    for (const auto& hj : h)
        if (hj.nvars() != n)
            throw DimensionError("constraint and objective have different numbers of variables");
    Lagrangian lag;
    lag.n = n;
    lag.m = m;
    lag.l = f.extend(n + m);
    for (std::size_t j = 0; j < m; ++j)
        lag.l += MPoly::variable(n + m, n + j) * h[j].extend(n + m);
    return lag;
}

Problem slack_transform(const MPoly& f, const std::vector<MPoly>& g, const std::vector<MPoly>& h)
{
    if (g.empty())
        throw PreconditionError("slack_transform needs at least one inequality");
    const std::size_t n = f.nvars();
    const std::size_t s = g.size();
    Problem p;
    p.nvars = n + s;
    p.slack = s;
    p.objective = f.extend(n + s);
    for (const auto& hi : h) {
        if (hi.nvars() != n)
            throw DimensionError("constraint and objective have different numbers of variables");
        p.equalities.push_back(hi.extend(n + s));
    }
    for (std::size_t j = 0; j < s; ++j) {
        if (g[j].nvars() != n)
            throw DimensionError("constraint and objective have different numbers of variables");
        MPoly z = MPoly::variable(n + s, n + j);
        p.equalities.push_back(g[j].extend(n + s) - z * z);
    }
    return p;
}

std::vector<std::size_t> value_ranks(const UPoly& g, const UPoly& w, std::vector<AlgebraicNumber>& roots)
{
    std::vector<std::size_t> ranks;
    if (roots.empty())
        return ranks;
    QuotientRing q(buchberger({univariate_in(w, 1, 0)}, MonomialOrder::lex(1)));
    UPoly mu = q.minimal_polynomial(univariate_in(rem(g, w), 1, 0));
    auto values = isolate_real_roots(mu);
    for (auto& a : roots) {
        Rational width = pow2(-20);
        for (;;) {
            Interval e = enclose(g, a, width);
            std::vector<std::size_t> hits;
            for (std::size_t k = 0; k < values.size(); ++k)
                if (values[k].interval().lo <= e.hi && e.lo <= values[k].interval().hi)
                    hits.push_back(k);
            if (hits.size() == 1) {
                ranks.push_back(hits[0]);
                break;
            }
            if (hits.empty())
                throw Error("value of a root escaped every root of its minimal polynomial");
            width /= 256;
            for (auto k : hits)
                values[k].refine_to(width);
        }
    }
    return ranks;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CriticalSystem {
    MPoly lagrangian;
    MPoly objective;
    std::vector<MPoly> constraints;
    std::size_t nx = 0;
    std::size_t n_report = 0;
    std::optional<std::size_t> bezout;
};

Coordinate make_coordinate(const UPoly& g, const AlgebraicNumber& a, int digits)
{
    Coordinate c;
    c.poly = g;
    AlgebraicNumber b = a;
    c.exact = recognize_rational(g, b);
    if (c.exact) {
        c.enclosure = {*c.exact, *c.exact};
        c.approx = to_double(*c.exact);
        c.decimal = to_decimal(*c.exact, digits);
        return c;
    }
    Rational width = pow10(-(digits + 2));
    Interval iv = enclose(g, b, width);
    for (int k = 0; k < 40 && to_decimal(iv.lo, digits) != to_decimal(iv.hi, digits); ++k) {
        width *= pow2(-16);
        iv = enclose(g, b, width);
    }
    Rational mid = iv.midpoint();
    c.approx = to_double(mid);
    c.decimal = to_decimal(mid, digits);
    Rational as_double(c.approx);
    c.enclosure = hull(iv, Interval{as_double, as_double});
    return c;
}

Minimizer make_minimizer(const CriticalSystem& sys, const std::vector<UPoly>& point, const UPoly& r,
                         const AlgebraicNumber& a, std::size_t index, int digits)
{
    Minimizer m{index, a, {}, {}, {}};
    for (std::size_t i = 0; i < sys.n_report; ++i)
        m.coords.push_back(make_coordinate(point[i], a, digits));
    for (std::size_t i = sys.nx; i < point.size(); ++i)
        m.multipliers.push_back(make_coordinate(point[i], a, digits));
    m.value = make_coordinate(r, a, digits);
    return m;
}

// max |g(x)| over the generators at rational approximations of the point.
Rational residual(const std::vector<MPoly>& gens, const std::vector<UPoly>& point, const AlgebraicNumber& a, int digits)
{
    AlgebraicNumber b = a;
    std::vector<Rational> x;
    for (const auto& p : point)
        x.push_back(enclose(p, b, pow10(-(digits + 8))).midpoint());
    Rational worst(0);
    for (const auto& g : gens)
        worst = std::max(worst, Rational(abs(g.evaluate(x))));
    return worst;
}

RootDiagnostic classify(const Certifier& cert, const UPoly& det, const AlgebraicNumber& a, std::size_t index,
                        bool constrained)
{
    RootDiagnostic d;
    d.index = index;
    d.t = a.approx();
    d.det_sign = sign_at(det, a);
    AlgebraicNumber b = a;
    if (d.det_sign == 0)
        d.det_exact = Rational(0);
    else
        d.det_exact = recognize_rational(det, b);
    d.det_approx = d.det_exact ? to_double(*d.det_exact) : to_double(enclose(det, b, pow2(-60)).midpoint());

    PdResult pd;
    try {
        pd = constrained ? cert.pd_on_nullspace_at(a) : cert.pd_at(a);
    } catch (const ConstraintQualificationError&) {
        d.classification = RootClass::ConstraintQualificationFailed;
        return d;
    }
    d.minor_signs = pd.minor_signs;
    d.witness = pd.witness;
    d.pivot_columns = pd.pivot_columns;
    if (pd.positive)
        d.classification = RootClass::Minimizer;
    else if (d.det_sign == 0)
        d.classification = RootClass::Undecided;
    else
        d.classification = RootClass::NotMinimizer;
    return d;
}

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads)
                    body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

SolveReport run_critical(const CriticalSystem& sys, const SolveOptions& opt, bool global)
{
    const auto t_total = Clock::now();
    SolveReport out;
    out.n = sys.n_report;
    Diagnostics& d = out.diagnostics;
    d.bezout_bound = sys.bezout;
    const bool constrained = !sys.constraints.empty();

    const auto gens = gradient(sys.lagrangian);
    auto t0 = Clock::now();
    UnivariateRep rep;
    try {
        rep = separating_representation(gens);
    } catch (const PositiveDimensionalError&) {
        d.timings_ms["representation"] = ms_since(t0);
        d.timings_ms["total"] = ms_since(t_total);
        d.zero_dimensional = false;
        d.messages.push_back("the critical ideal is not zero-dimensional");
        out.status = Status::PositiveDimensional;
        out.hint = "the critical set is infinite; use --mode perturb";
        return out;
    }
    d.timings_ms["representation"] = ms_since(t0);
    d.zero_dimensional = true;
    d.j = rep.cov.j;
    d.deg_w = static_cast<std::size_t>(rep.w.degree().value());
    d.multiplicity_dimension = rep.multiplicity_dimension;
    if (!verify_representation(gens, rep))
        throw Error("univariate representation does not satisfy the critical system");
    if (sys.bezout && d.deg_w > *sys.bezout)
        throw Error("deg w = " + std::to_string(d.deg_w) + " exceeds the Bezout bound " + std::to_string(*sys.bezout));

    t0 = Clock::now();
    auto roots = d.deg_w > 0 ? isolate_real_roots(rep.w) : std::vector<AlgebraicNumber>{};
    d.n_real_roots = roots.size();
    d.timings_ms["isolation"] = ms_since(t0);

    t0 = Clock::now();
    HessianCurve hc = hessian_curve(sys.lagrangian, rep, sys.nx, opt.convention);
    std::optional<JacobianCurve> jc;
    if (constrained)
        jc = jacobian_curve(sys.constraints, rep, sys.nx, opt.convention);
    Certifier cert(hc, jc);
    const UPoly& det = cert.determinant();
    d.roots.resize(roots.size());
    parallel_for(roots.size(), opt.threads,
                 [&](std::size_t i) { d.roots[i] = classify(cert, det, roots[i], i, constrained); });
    d.timings_ms["certification"] = ms_since(t0);

    bool det_ok = true, cq_ok = true;
    for (const auto& rd : d.roots) {
        det_ok = det_ok && rd.det_sign != 0;
        cq_ok = cq_ok && rd.classification != RootClass::ConstraintQualificationFailed;
        if (rd.classification == RootClass::Undecided) {
            out.status = Status::PreconditionFailed;
            d.messages.push_back("Hessian determinant vanishes at critical point " + std::to_string(rd.index) +
                                 " and the second-order test is inconclusive");
        } else if (rd.classification == RootClass::ConstraintQualificationFailed) {
            out.status = Status::PreconditionFailed;
            d.messages.push_back("constraint qualification failed at critical point " + std::to_string(rd.index));
        } else if (rd.classification == RootClass::Minimizer && rd.det_sign == 0) {
            d.messages.push_back("Hessian determinant vanishes at certified minimizer " + std::to_string(rd.index));
        }
    }
    d.det_nonvanishing = det_ok;
    if (constrained) {
        d.constraint_qualification = cq_ok;
        d.messages.push_back("constraint Jacobian rank was checked at the real critical points only");
    }
    if (roots.empty())
        d.messages.push_back("empty real critical set");

    PointEvaluator eval(rep.point(), rep.w);
    const auto& point = eval.point();
    for (const auto& h : sys.constraints)
        if (!eval(h).is_zero())
            throw Error("a constraint does not vanish on the critical parametrization");
    UPoly r = eval(sys.objective);
    if (d.deg_w > 0 && r.degree() >= rep.w.degree())
        throw Error("deg r is not below deg w");

    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (d.roots[i].classification != RootClass::Minimizer)
            continue;
        out.minimizers.push_back(make_minimizer(sys, point, r, roots[i], i, opt.digits));
        Rational res = residual(gens, point, roots[i], opt.digits);
        d.max_residual = std::max(d.max_residual, res);
        if (res >= pow10(-(opt.digits - 2)))
            throw Error("gradient residual " + to_decimal(res, 3) + " at minimizer " + std::to_string(i));
    }

    if (global) {
        t0 = Clock::now();
        GlobalMinimum gm;
        gm.r = r;
        gm.attained = opt.assume_attained;
        if (roots.empty()) {
            out.status = Status::PreconditionFailed;
            d.messages.push_back("no real critical points: the minimum is not attained");
        } else {
            auto ranks = value_ranks(r, rep.w, roots);
            const std::size_t best = *std::min_element(ranks.begin(), ranks.end());
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (ranks[i] == best)
                    gm.argmin.push_back(i);
            gm.value = make_coordinate(r, roots[gm.argmin.front()], opt.digits);
            for (auto i : gm.argmin) {
                gm.points.push_back(make_minimizer(sys, point, r, roots[i], i, opt.digits));
                if (opt.assume_attained && d.roots[i].classification == RootClass::NotMinimizer)
                    d.messages.push_back("critical point " + std::to_string(i) +
                                         " has the least critical value but is not a local minimizer;"
                                         " the minimum is probably not attained");
            }
            out.f_min = std::move(gm);
        }
        d.timings_ms["global"] = ms_since(t0);
    }
    out.rep = std::move(rep);
    d.timings_ms["total"] = ms_since(t_total);
    return out;
}

std::optional<std::size_t> bezout_bound(const MPoly& f)
{
    const int d = f.total_degree().is_neg_inf() ? 0 : f.total_degree().value();
    if (d < 1)
        return std::nullopt;
    std::size_t b = 1;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (b > (std::size_t(1) << 40))
            return std::nullopt;
        b *= static_cast<std::size_t>(d - 1);
    }
    return b;
}

CriticalSystem unconstrained_system(const MPoly& f)
{
    CriticalSystem sys;
    sys.lagrangian = f;
    sys.objective = f;
    sys.nx = f.nvars();
    sys.n_report = f.nvars();
    sys.bezout = bezout_bound(f);
    return sys;
}

CriticalSystem constrained_system(const MPoly& f, const std::vector<MPoly>& h, std::size_t n_report)
{
    Lagrangian lag = build_lagrangian(f, h);
    CriticalSystem sys;
    const std::size_t total = lag.n + lag.m;
    sys.lagrangian = lag.l;
    sys.objective = f.extend(total);
    for (const auto& hj : h)
        sys.constraints.push_back(hj.extend(total));
    sys.nx = lag.n;
    sys.n_report = n_report;
    return sys;
}

// Keeps the first of every group of minimizers whose reported coordinates agree exactly.
std::vector<Minimizer> dedupe(std::vector<Minimizer> ms, const UnivariateRep& rep, std::size_t n,
                              std::vector<AlgebraicNumber>& roots)
{
    if (ms.size() < 2)
        return ms;
    std::vector<std::vector<std::size_t>> ranks(n);
    const auto point = rep.point();
    for (std::size_t i = 0; i < n; ++i)
        ranks[i] = value_ranks(point[i], rep.w, roots);
    std::vector<Minimizer> out;
    std::vector<std::size_t> kept;
    for (auto& m : ms) {
        bool duplicate = false;
        for (auto k : kept) {
            bool same = true;
            for (std::size_t i = 0; i < n && same; ++i)
                same = ranks[i][k] == ranks[i][m.root_index];
            duplicate = duplicate || same;
        }
        if (!duplicate) {
            kept.push_back(m.root_index);
            out.push_back(std::move(m));
        }
    }
    return out;
}

} // namespace

PreconditionReport check_preconditions_unconstrained(const MPoly& f, const SolveOptions& opt)
{
    SolveReport r = grulom(f, opt);
    PreconditionReport p;
    p.zero_dimensional = r.diagnostics.zero_dimensional;
    p.det_nonvanishing = r.diagnostics.det_nonvanishing;
    for (const auto& rd : r.diagnostics.roots)
        if (rd.det_sign == 0)
            p.det_witnesses.push_back(rd.index);
    return p;
}

SolveReport grulom(const MPoly& f, const SolveOptions& opt)
{
    return run_critical(unconstrained_system(f), opt, false);
}

SolveReport grulom_plus(const MPoly& f, const SolveOptions& opt)
{
    return run_critical(unconstrained_system(f), opt, true);
}

SolveReport gralom(const MPoly& f, const std::vector<MPoly>& h, const SolveOptions& opt)
{
    if (h.empty())
        return grulom(f, opt);
    return run_critical(constrained_system(f, h, f.nvars()), opt, false);
}

SolveReport gralom_plus(const MPoly& f, const std::vector<MPoly>& h, const SolveOptions& opt)
{
    if (h.empty())
        return grulom_plus(f, opt);
    return run_critical(constrained_system(f, h, f.nvars()), opt, true);
}

SolveReport solve_inequalities(const MPoly& f, const std::vector<MPoly>& g, const std::vector<MPoly>& h,
                               const SolveOptions& opt, bool global)
{
    if (g.empty())
        return global ? gralom_plus(f, h, opt) : gralom(f, h, opt);
    Problem p = slack_transform(f, g, h);
    SolveReport out = run_critical(constrained_system(p.objective, p.equalities, f.nvars()), opt, global);
    if (!out.rep)
        return out;
    auto roots = out.rep->w.degree() > 0 ? isolate_real_roots(out.rep->w) : std::vector<AlgebraicNumber>{};
    const std::size_t before = out.minimizers.size();
    out.minimizers = dedupe(std::move(out.minimizers), *out.rep, f.nvars(), roots);
    if (out.minimizers.size() != before)
        out.diagnostics.messages.push_back(std::to_string(before - out.minimizers.size()) +
                                           " minimizers coincided after dropping slack variables");
    if (out.f_min)
        out.f_min->points = dedupe(std::move(out.f_min->points), *out.rep, f.nvars(), roots);
    return out;
}

std::vector<PerturbationStep> perturb_solve(const MPoly& f, const std::vector<MPoly>& h,
                                            const std::vector<std::vector<Rational>>& schedule,
                                            const SolveOptions& opt)
{
    std::vector<PerturbationStep> steps;
    const std::size_t n = f.nvars();
    for (const auto& eps : schedule) {
        PerturbationStep step;
        step.eps = eps;
        try {
            if (eps.size() != n)
                throw DimensionError("perturbation has " + std::to_string(eps.size()) + " components, expected " +
                                     std::to_string(n));
            MPoly fe = f;
            for (std::size_t i = 0; i < n; ++i)
                fe += MPoly::variable(n, i) * eps[i];
            step.report = gralom_plus(fe, h, opt);
        } catch (const Error& e) {
            step.error = e.what();
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

} // namespace polyloc
