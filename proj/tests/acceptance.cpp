// One PASS/FAIL line per acceptance criterion.
#include "polyloc/certify.hpp"
#include "polyloc/groebner.hpp"
#include "polyloc/parse.hpp"
#include "polyloc/solve.hpp"
#include "test_support.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using Real60 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;
using Mat60 = Eigen::Matrix<Real60, Eigen::Dynamic, Eigen::Dynamic>;

namespace Eigen::internal {
template <>
struct hypot_impl<Real60> {
    static Real60 run(const Real60& x, const Real60& y) { return boost::multiprecision::hypot(x, y); }
};
} // namespace Eigen::internal

using namespace polyloc;
using polyloc::testing::P;

namespace {

class Criterion {
public:
    void check(bool ok, const std::string& what)
    {
        if (!ok)
            failed_.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what)
    {
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream s;
            s << what << ": " << std::setprecision(12) << got << " vs " << want << " (tol " << tol << ")";
            failed_.push_back(s.str());
        }
    }
    void note(const std::string& s) { notes_.push_back(s); }
    // Failures that come from the reference data itself; the line still says FAIL.
    void gap(const std::string& s) { gaps_.push_back(s); }

    bool passed() const { return failed_.empty() && gaps_.empty(); }
    bool only_gaps() const { return failed_.empty() && !gaps_.empty(); }
    const std::vector<std::string>& failed() const { return failed_; }
    const std::vector<std::string>& gaps() const { return gaps_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failed_;
    std::vector<std::string> gaps_;
    std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
double timed(F&& f)
{
    auto start = std::chrono::steady_clock::now();
    f();
    return seconds_since(start);
}

std::string fmt(double x, int prec = 3)
{
    std::ostringstream s;
    s << std::setprecision(prec) << x;
    return s.str();
}

std::vector<Rational> exact_coords(const Minimizer& m)
{
    std::vector<Rational> out;
    for (const auto& c : m.coords)
        out.push_back(c.exact ? *c.exact : Rational(-999));
    return out;
}

std::vector<std::vector<std::string>> decimal_set(const SolveReport& r)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& m : r.minimizers) {
        std::vector<std::string> row;
        for (const auto& c : m.coords)
            row.push_back(c.decimal);
        out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SolveOptions with(HessianConvention c)
{
    SolveOptions opt;
    opt.convention = c;
    return opt;
}

std::string rosenbrock(int n)
{
    std::string s;
    for (int i = 1; i < n; ++i) {
        if (i > 1)
            s += " + ";
        std::string a = "x" + std::to_string(i), b = "x" + std::to_string(i + 1);
        s += "100*(" + a + "^2 - " + b + ")^2 + (" + a + " - 1)^2";
    }
    return s;
}

const char* double_well = "x1^2 + x2^4 - 2*x2^2";
const char* saddle = "x1^2 + (x1*x2 - 1)^2";
const char* circle_objective = "100*x1^4 - 200*x1^2*x2 + x1^2 + 100*x2^2 - 2*x1 + 1";
const char* unit_circle = "x1^2 + x2^2 - 1";

// Every instance of criteria 1-6, as (name, solver).
std::vector<std::pair<std::string, std::function<SolveReport(const SolveOptions&)>>> instances()
{
    std::vector<std::pair<std::string, std::function<SolveReport(const SolveOptions&)>>> out;
    out.emplace_back("double well", [](const SolveOptions& o) { return grulom(P(double_well, 2), o); });
    out.emplace_back("saddle", [](const SolveOptions& o) { return grulom(P(saddle, 2), o); });
    out.emplace_back("double well global", [](const SolveOptions& o) { return grulom_plus(P(double_well, 2), o); });
    for (int n = 2; n <= 4; ++n)
        out.emplace_back("rosenbrock n=" + std::to_string(n),
                         [n](const SolveOptions& o) { return grulom(P(rosenbrock(n), n), o); });
    out.emplace_back("circle", [](const SolveOptions& o) {
        return gralom(P(circle_objective, 2), {P(unit_circle, 2)}, o);
    });
    out.emplace_back("disk", [](const SolveOptions& o) {
        return solve_inequalities(P(circle_objective, 2), {P("1 - x1^2 - x2^2", 2)}, {}, o);
    });
    return out;
}

Criterion double_well_local()
{
    Criterion c;
    SolveReport r;
    double secs = timed([&] { r = grulom(P(double_well, 2)); });
    c.check(r.status == Status::Ok, "status ok");
    c.check(r.diagnostics.j == 1, "j = 1");
    if (r.rep) {
        c.check(r.rep->w == parse_upoly("t^3 - t"), "w = t^3 - t");
        c.check(r.rep->v.size() == 2 && r.rep->v[1] == parse_upoly("t"), "v2 = t");
        HessianCurve h = hessian_curve(P(double_well, 2), *r.rep, 2);
        c.check(h.h(0, 0) == UPoly(Rational(2)) && h.h(0, 1).is_zero() && h.h(1, 0).is_zero() &&
                    h.h(1, 1) == parse_upoly("12*t^2 - 4"),
                "H(t) = diag(2, 12t^2 - 4)");
    } else {
        c.check(false, "representation");
    }
    std::set<std::vector<Rational>> pts;
    for (const auto& m : r.minimizers)
        pts.insert(exact_coords(m));
    c.check(pts == std::set<std::vector<Rational>>{{0, -1}, {0, 1}}, "minimizers exactly {(0,-1),(0,1)}");
    c.check(secs < 1, "runtime " + fmt(secs) + " s < 1 s");
    return c;
}

Criterion saddle_rejected()
{
    Criterion c;
    SolveReport r;
    double secs = timed([&] { r = grulom(P(saddle, 2)); });
    c.check(r.status == Status::Ok, "status ok");
    c.check(r.minimizers.empty(), "0 local minimizers");
    bool recorded = false;
    for (const auto& d : r.diagnostics.roots)
        if (d.det_exact && *d.det_exact == -4 && d.det_sign < 0)
            recorded = true;
    c.check(recorded, "det = -4 recorded");
    c.check(secs < 1, "runtime " + fmt(secs) + " s < 1 s");
    return c;
}

Criterion double_well_global()
{
    Criterion c;
    auto r = grulom_plus(P(double_well, 2));
    c.check(r.f_min.has_value(), "f_min present");
    if (r.f_min) {
        c.check(r.f_min->r == parse_upoly("-t^2"), "r(t) = -t^2");
        c.check(r.f_min->value.exact && *r.f_min->value.exact == -1, "f_min = -1 exactly");
        std::set<std::vector<Rational>> pts;
        for (const auto& m : r.f_min->points)
            pts.insert(exact_coords(m));
        c.check(pts == std::set<std::vector<Rational>>{{0, -1}, {0, 1}}, "glo exactly {(0,-1),(0,1)}");
    }
    return c;
}

Criterion rosenbrock_table()
{
    Criterion c;
    struct Row {
        int n;
        std::size_t deg_w, real, loc;
        double second;
    };
    for (Row row : {Row{2, 1, 1, 1, 0}, Row{3, 3, 1, 1, 0}, Row{4, 9, 3, 2, -0.77565}, Row{5, 27, 3, 2, -0.96205}}) {
        const std::string tag = "n=" + std::to_string(row.n) + " ";
        SolveReport r;
        double secs = timed([&] { r = grulom(P(rosenbrock(row.n), row.n)); });
        c.note(tag + fmt(secs) + " s");
        c.check(r.status == Status::Ok, tag + "status ok");
        c.check(r.diagnostics.deg_w == row.deg_w, tag + "deg w = " + std::to_string(r.diagnostics.deg_w));
        c.check(r.diagnostics.n_real_roots == row.real,
                tag + "real roots = " + std::to_string(r.diagnostics.n_real_roots));
        c.check(r.minimizers.size() == row.loc, tag + "#loc = " + std::to_string(r.minimizers.size()));
        bool ones = false;
        std::optional<double> other;
        for (const auto& m : r.minimizers) {
            auto e = exact_coords(m);
            if (std::all_of(e.begin(), e.end(), [](const Rational& q) { return q == 1; }))
                ones = true;
            else
                other = m.coords[0].approx;
        }
        c.check(ones, tag + "alpha_A = (1, ..., 1) exactly");
        if (row.loc == 2) {
            c.check(other.has_value(), tag + "second minimizer");
            if (other)
                c.near(*other, row.second, 1e-4, tag + "alpha_B first coordinate");
        }
        if (row.n == 4)
            c.check(secs < 60, tag + "runtime " + fmt(secs) + " s < 60 s");
    }
    return c;
}

Criterion circle_table()
{
    Criterion c;
    SolveReport r;
    double secs = timed([&] { r = gralom(P(circle_objective, 2), {P(unit_circle, 2)}); });
    c.check(r.status == Status::Ok, "status ok");
    if (!r.rep)
        return c.check(false, "representation"), c;
    UPoly expected = parse_upoly("40000*t^8 + 10400*t^6 - 400*t^5 - 70599*t^4 + 598*t^3 + 30200*t^2 - 198*t - 1");
    c.check(r.rep->w * Rational(40000) == expected, "w coefficients (40000, 10400, -400, -70599, 598, 30200, -198, -1)");
    auto roots = isolate_real_roots(r.rep->w);
    const std::vector<double> printed{-0.8684745451, -0.7839301862, -0.0033445316,
                                      0.0099009901,  0.7864151542,  0.8658463102};
    c.check(roots.size() == 6, "6 real roots");
    for (std::size_t i = 0; i < std::min(roots.size(), printed.size()); ++i)
        c.near(refine(roots[i], pow10(-14)).approx(), printed[i], 1e-8, "root " + std::to_string(i + 1));

    struct Row {
        double x1, x2, f;
    };
    const std::vector<Row> table{{-0.7839301862, 0.6208489858, 3.186378996},
                                 {0.0099009901, -0.9999509840, 100.9900990},
                                 {0.7864151542, 0.6176983125, 0.045674808}};
    c.check(r.minimizers.size() == 3, "3 minimizers");
    for (std::size_t i = 0; i < std::min(r.minimizers.size(), table.size()); ++i) {
        const auto& m = r.minimizers[i];
        const std::string tag = "row " + std::to_string(i + 1) + " ";
        c.near(m.coords[0].approx, table[i].x1, 1e-8, tag + "x1");
        c.near(m.coords[1].approx, table[i].x2, 1e-8, tag + "x2");
        c.near(m.value.approx, table[i].f, 1e-6, tag + "f");
    }
    c.check(secs < 30, "runtime " + fmt(secs) + " s < 30 s");
    return c;
}

Criterion disk()
{
    Criterion c;
    auto r = solve_inequalities(P(circle_objective, 2), {P("1 - x1^2 - x2^2", 2)});
    c.check(r.status == Status::Ok, "status ok");
    c.check(r.minimizers.size() == 1, "single minimizer (got " + std::to_string(r.minimizers.size()) + ")");
    if (!r.minimizers.empty()) {
        c.near(r.minimizers[0].coords[0].approx, 0.786415154, 1e-8, "x1");
        c.near(r.minimizers[0].coords[1].approx, 0.617698312, 1e-8, "x2");
    }
    return c;
}

Criterion perturbed_sphere()
{
    Criterion c;
    struct Row {
        Rational eps;
        double x1, x2, f;
        // Independent 50-digit KKT solution.
        double ref_x1, ref_x2, ref_f;
    };
    const std::vector<Row> rows{
        {Rational(1, 100000), -0.01348524792, -0.7070425062, -0.000014242, -0.0134852479240331, -0.707042483903346,
         -1.42426320395646e-5},
        {Rational(1, 10000000), -0.00291998727, -0.7071036821, -0.000000141, -0.00291998727162788,
         -0.707103766668773, -1.41640053831547e-7},
        {Rational(1, 1000000000), -0.00062977344, -0.7071066611, -0.000000001, -0.000629773447907787,
         -0.707106640962099, -1.41468575223459e-9},
        {Rational(1, 100000000000), -0.00013571219, -0.7071048281, -0.000000000, -0.000135712197484161,
         -0.707106774674872, -1.41431534000953e-11}};
    std::vector<std::vector<Rational>> schedule;
    for (const auto& row : rows)
        schedule.push_back(std::vector<Rational>(3, row.eps));
    schedule.push_back(std::vector<Rational>(3, Rational(0)));
    auto steps = perturb_solve(P("x1^4", 3), {P("x1^2 + x2^2 + x3^2 - 1", 3)}, schedule);

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& rep = steps[i].report;
        const std::string tag = "eps=" + to_decimal(row.eps, 1) + " ";
        c.check(steps[i].error.empty() && rep.status == Status::Ok && rep.f_min && rep.f_min->points.size() == 1,
                tag + "single global minimizer");
        if (!rep.f_min || rep.f_min->points.size() != 1)
            continue;
        const auto& pt = rep.f_min->points[0];
        const double got[3] = {pt.coords[0].approx, pt.coords[1].approx, pt.coords[2].approx};
        const double printed[3] = {row.x1, row.x2, row.x2};
        const double ref[3] = {row.ref_x1, row.ref_x2, row.ref_x2};
        for (int k = 0; k < 3; ++k) {
            const std::string what = tag + "x" + std::to_string(k + 1);
            bool agrees_with_reference = std::abs(got[k] - ref[k]) <= 1e-9;
            c.check(agrees_with_reference, what + " matches the 50-digit KKT solution");
            if (std::abs(got[k] - printed[k]) > 1e-6) {
                std::ostringstream s;
                s << what << ": " << std::setprecision(11) << got[k] << " vs printed " << printed[k]
                  << " (tol 1e-6); the 50-digit KKT solution is " << ref[k];
                if (agrees_with_reference && std::abs(printed[k] - ref[k]) > 1e-6)
                    c.gap(s.str());
                else
                    c.check(false, s.str());
            }
        }
        c.near(rep.f_min->value.approx, row.f, 1e-7, tag + "f");
        c.near(rep.f_min->value.approx, row.ref_f, 1e-15, tag + "f vs reference");
    }
    c.check(steps.back().report.status == Status::PositiveDimensional, "eps=0 positive_dimensional");
    return c;
}

// Random zero-dimensional systems: x_i^d + lower-order terms.
std::vector<MPoly> random_system(std::mt19937& rng, std::size_t n, unsigned degree)
{
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(polyloc::testing::random_mpoly(rng, n, degree, 5) +
                       MPoly::monomial(Monomial::variable(n, i, degree), Rational(1)));
    return gens;
}

UPolyMatrix random_symmetric(std::mt19937& rng, std::size_t n, const UPoly& w, int shift)
{
    UPolyMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            UPoly e = rem(polyloc::testing::random_upoly(rng, 2), w);
            if (i == j)
                e += UPoly(Rational(shift));
            h(i, j) = e;
            h(j, i) = e;
        }
    return h;
}

Real60 to_real(const Rational& q)
{
    return Real60(q.get_num().get_str()) / Real60(q.get_den().get_str());
}

// Minimum eigenvalue of Z^T H Z with Z an orthonormal basis of ker C.
Real60 projected_min_eigenvalue(const QMatrix& h, const QMatrix& c)
{
    const Eigen::Index n = static_cast<Eigen::Index>(h.rows());
    const Eigen::Index m = static_cast<Eigen::Index>(c.rows());
    Mat60 hm(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            hm(i, j) = to_real(h(i, j));
    Mat60 z = Mat60::Identity(n, n);
    if (m > 0) {
        Mat60 ct(n, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                ct(j, i) = to_real(c(i, j));
        Eigen::HouseholderQR<Mat60> qr(ct);
        Mat60 q = qr.householderQ() * Mat60::Identity(n, n);
        z = q.rightCols(n - m);
    }
    Mat60 projected = z.transpose() * hm * z;
    Eigen::SelfAdjointEigenSolver<Mat60> es(projected);
    return es.eigenvalues().minCoeff();
}

// Random coercive bivariate quartic: a definite quartic form plus dense lower terms.
MPoly random_quartic(std::mt19937& rng, int lower_range)
{
    MPoly f = P("(x1^2 + x2^2)^2", 2);
    std::uniform_int_distribution<int> small(-4, 4);
    for (unsigned d = 0; d <= 4; ++d)
        for (unsigned a = 0; a <= d; ++a) {
            Rational coeff;
            if (d == 4) {
                coeff = Rational(small(rng), 32);
            } else {
                do
                    coeff = polyloc::testing::random_rational(rng, lower_range, 2);
                while (coeff == 0);
            }
            f.add_term(Monomial{a, d - a}, coeff);
        }
    return f;
}

Criterion property_suites()
{
    Criterion c;
    const int count = 100;
    std::mt19937 rng(20240601);

    int spoly = 0, shuffles = 0;
    for (int k = 0; k < count; ++k) {
        const std::size_t n = 2 + k % 2;
        auto gens = random_system(rng, n, 2);
        for (auto order : {MonomialOrder::lex(n), MonomialOrder::grevlex(n)}) {
            ReducedGB g = buchberger(gens, order);
            ReducedGB r = radical_zero_dim(buchberger(gens, MonomialOrder::grevlex(n)));
            if (satisfies_buchberger_criterion(g) && is_reduced(g) && satisfies_buchberger_criterion(r))
                ++spoly;
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (buchberger(shuffled, order).generators() == g.generators())
                ++shuffles;
        }
    }
    c.check(spoly == 2 * count, "S-polynomials reduce to zero: " + std::to_string(spoly) + "/" +
                                    std::to_string(2 * count));
    c.check(shuffles == 2 * count, "reduced basis independent of generator order: " + std::to_string(shuffles) +
                                       "/" + std::to_string(2 * count));

    int divmod = 0;
    for (int k = 0; k < count; ++k) {
        UPoly p = polyloc::testing::random_upoly(rng, 1 + k % 10);
        UPoly w = polyloc::testing::random_upoly(rng, 1 + k % 6);
        auto [q, r] = univ_divmod(p, w);
        if (q * w + r == p && r.degree() < w.degree())
            ++divmod;
    }
    c.check(divmod == count, "univ_divmod round trip: " + std::to_string(divmod));

    int sturm = 0;
    for (int k = 0; k < count; ++k) {
        UPoly p = polyloc::testing::random_upoly(rng, 2 + k % 4);
        for (int i = 0; i < 1 + k % 4; ++i) {
            Rational r = polyloc::testing::random_rational(rng, 10, 3);
            p = p * UPoly(std::vector<Rational>{-r, Rational(1)});
        }
        UPoly sf = squarefree_part(p);
        auto roots = isolate_real_roots(sf);
        SturmSequence seq(sf);
        bool ok = static_cast<int>(roots.size()) == seq.count_all();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const Interval& iv = roots[i].interval();
            if (iv.lo == iv.hi)
                ok = ok && sf.evaluate(iv.lo) == 0;
            else if (sf.evaluate(iv.lo) != 0 && sf.evaluate(iv.hi) != 0)
                ok = ok && seq.count(iv.lo, iv.hi) == 1;
            if (i > 0)
                ok = ok && roots[i - 1].interval().hi <= iv.lo;
        }
        sturm += ok;
    }
    c.check(sturm == count, "isolation agrees with Sturm counts: " + std::to_string(sturm));

    int invariance = 0;
    for (int k = 0; k < count; ++k) {
        UPoly w = squarefree_part(polyloc::testing::random_upoly(rng, 3 + k % 4));
        auto roots = isolate_real_roots(w);
        UPoly g = polyloc::testing::random_upoly(rng, 1 + k % 5);
        if (k % 3 == 0)
            g = g * w;
        bool ok = true;
        for (const auto& a : roots)
            ok = ok && sign_at(g, a) == sign_at(g, refine(a, pow2(-50)));
        invariance += ok;
    }
    c.check(invariance == count, "sign_at invariant under refinement: " + std::to_string(invariance));

    UPoly w = parse_upoly("(t + 3/2)*t*(t - 5/4)");
    auto roots = isolate_real_roots(w);
    const std::vector<Rational> at{Rational(-3, 2), Rational(0), Rational(5, 4)};
    UnivariateRep rep;
    rep.cov = ChangeOfVariables::make(1, 0);
    rep.nvars = 1;
    rep.w = w;
    rep.v = {UPoly::identity()};
    int pd_instances = 0, pd_agree = 0, pd_compared = 0;
    for (int k = 0; k < count; ++k) {
        const std::size_t n = 2 + k % 3;
        const std::size_t m = std::min<std::size_t>(k % 3, n - 1);
        HessianCurve hc{random_symmetric(rng, n, w, k % 4), w, HessianConvention::Direct};
        std::optional<JacobianCurve> jc;
        if (m > 0) {
            jc = JacobianCurve{UPolyMatrix(m, n), w};
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    jc->c(i, j) = rem(polyloc::testing::random_upoly(rng, 1), w);
        }
        Certifier cert(hc, jc);
        bool ok = true;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            QMatrix h = hc.h.map([&](const UPoly& p) { return p.evaluate(at[i]); });
            QMatrix cm = jc ? jc->c.map([&](const UPoly& p) { return p.evaluate(at[i]); }) : QMatrix(0, n);
            PdResult r;
            try {
                r = cert.pd_on_nullspace_at(roots[i]);
            } catch (const ConstraintQualificationError&) {
                continue;
            }
            Real60 lambda = projected_min_eigenvalue(h, cm);
            if (abs(lambda) < Real60("1e-40"))
                continue;
            ++pd_compared;
            ok = ok && r.positive == (lambda > 0);
        }
        ++pd_instances;
        pd_agree += ok;
    }
    c.check(pd_agree == pd_instances, "bordered criterion agrees with projected eigenvalues: " +
                                          std::to_string(pd_agree) + "/" + std::to_string(pd_instances) + " (" +
                                          std::to_string(pd_compared) + " points)");

    int solved = 0, degrees = 0;
    for (int k = 0; k < count; ++k) {
        MPoly f = random_quartic(rng, 3);
        auto r = grulom_plus(f);
        if (r.status != Status::Ok || !r.rep)
            continue;
        ++solved;
        bool ok = r.rep->w.degree() <= Degree(9);
        if (r.f_min)
            ok = ok && r.f_min->r.degree() < r.rep->w.degree();
        degrees += ok;
    }
    c.check(solved >= count / 2, "solved unconstrained instances: " + std::to_string(solved));
    c.check(degrees == solved, "deg r < deg w <= (d-1)^n: " + std::to_string(degrees) + "/" + std::to_string(solved));
    return c;
}

// Double-precision evaluation of a bivariate polynomial and its derivatives.
struct Dense2 {
    struct T {
        double c;
        int a, b;
    };
    std::vector<T> terms;

    explicit Dense2(const MPoly& p)
    {
        for (const auto& [m, coeff] : p.terms())
            terms.push_back({to_double(coeff), static_cast<int>(m[0]), static_cast<int>(m[1])});
    }
    double operator()(double x, double y) const
    {
        double s = 0;
        for (const auto& t : terms)
            s += t.c * std::pow(x, t.a) * std::pow(y, t.b);
        return s;
    }
};

// Local minimizers by grid scan, Newton polishing and a second-order filter.
std::vector<std::array<double, 2>> oracle_minimizers(const MPoly& f, double radius, double step)
{
    Dense2 fv(f), gx(f.derivative(0)), gy(f.derivative(1)), hxx(f.derivative(0).derivative(0)),
        hxy(f.derivative(0).derivative(1)), hyy(f.derivative(1).derivative(1));
    const int k = static_cast<int>(std::ceil(radius / step));
    const int side = 2 * k + 1;
    std::vector<double> grid(static_cast<std::size_t>(side) * side);
    auto at = [&](int i, int j) -> double& { return grid[static_cast<std::size_t>(i) * side + j]; };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            at(i, j) = fv((i - k) * step, (j - k) * step);

    std::vector<std::array<double, 2>> found;
    for (int i = 1; i + 1 < side; ++i)
        for (int j = 1; j + 1 < side; ++j) {
            double v = at(i, j);
            bool local = true;
            for (int di = -1; di <= 1 && local; ++di)
                for (int dj = -1; dj <= 1 && local; ++dj)
                    if ((di || dj) && at(i + di, j + dj) < v)
                        local = false;
            if (!local)
                continue;
            double x = (i - k) * step, y = (j - k) * step;
            bool converged = false;
            for (int it = 0; it < 100; ++it) {
                double a = hxx(x, y), b = hxy(x, y), d = hyy(x, y);
                double det = a * d - b * b;
                if (det == 0)
                    break;
                double u = gx(x, y), w = gy(x, y);
                double dx = (d * u - b * w) / det, dy = (a * w - b * u) / det;
                x -= dx;
                y -= dy;
                if (std::hypot(dx, dy) < 1e-14 * (1 + std::hypot(x, y))) {
                    converged = true;
                    break;
                }
            }
            if (!converged)
                continue;
            double a = hxx(x, y), b = hxy(x, y), d = hyy(x, y);
            if (!(a > 1e-9 && a * d - b * b > 1e-9))
                continue;
            bool dup = false;
            for (const auto& p : found)
                dup = dup || std::hypot(p[0] - x, p[1] - y) < 1e-6;
            if (!dup)
                found.push_back({x, y});
        }
    return found;
}

// Radius beyond which x . grad f > 0 for f = (x1^2 + x2^2)^2 + quartic perturbation + lower terms.
double critical_radius(const MPoly& f)
{
    double pert = 0;
    std::vector<double> lower(4, 0);
    for (const auto& [m, coeff] : f.terms()) {
        unsigned d = m.total_degree();
        double a = std::abs(to_double(coeff));
        if (d == 4)
            pert += a;
        else
            lower[d] += a * d;
    }
    // (x1^2 + x2^2)^2 contributes coefficients 1, 2, 1; bound the rest of the form by pert - 4.
    double q = 1 - (pert - 4);
    double r = 1;
    while (4 * q * std::pow(r, 4) <= lower[1] * r + lower[2] * r * r + lower[3] * r * r * r)
        r += 0.25;
    return r;
}

Criterion brute_force()
{
    Criterion c;
    std::mt19937 rng(777);
    int accepted = 0, matched = 0, tried = 0;
    std::size_t points = 0;
    while (accepted < 25 && tried < 200) {
        ++tried;
        MPoly f = random_quartic(rng, 2);
        auto pre = check_preconditions_unconstrained(f);
        if (!pre.zero_dimensional || pre.det_nonvanishing != true)
            continue;
        auto r = grulom(f);
        if (r.status != Status::Ok)
            continue;
        ++accepted;
        double radius = critical_radius(f) + 0.05;
        auto oracle = oracle_minimizers(f, radius, 1e-2);
        points += r.minimizers.size();
        bool ok = oracle.size() == r.minimizers.size();
        for (const auto& m : r.minimizers) {
            bool hit = false;
            for (const auto& p : oracle)
                hit = hit || (std::abs(p[0] - m.coords[0].approx) <= 1e-6 && std::abs(p[1] - m.coords[1].approx) <= 1e-6);
            ok = ok && hit;
        }
        if (!ok)
            c.check(false, "instance " + std::to_string(accepted) + ": engine " + std::to_string(r.minimizers.size()) +
                               " vs oracle " + std::to_string(oracle.size()) + " (" + to_string(f) + ")");
        matched += ok;
    }
    c.check(accepted == 25, "25 instances passing preconditions (got " + std::to_string(accepted) + ")");
    c.note(std::to_string(matched) + "/" + std::to_string(accepted) + " match, " + std::to_string(points) +
           " minimizers");
    return c;
}

Criterion convention_invariance()
{
    Criterion c;
    for (const auto& [name, solve] : instances()) {
        auto a = solve(with(HessianConvention::Direct));
        auto b = solve(with(HessianConvention::Congruent));
        c.check(a.status == b.status && decimal_set(a) == decimal_set(b), name);
    }
    return c;
}

} // namespace

int main()
{
    struct Entry {
        int id;
        const char* title;
        Criterion (*run)();
    };
    const std::vector<Entry> entries{
        {1, "double well x1^2 + x2^4 - 2 x2^2, local", double_well_local},
        {2, "saddle x1^2 + (x1 x2 - 1)^2 rejected", saddle_rejected},
        {3, "double well, global value", double_well_global},
        {4, "Rosenbrock n = 2..5", rosenbrock_table},
        {5, "quartic on the unit circle", circle_table},
        {6, "quartic on the unit disk", disk},
        {7, "x1^4 on the sphere, perturbation trajectory", perturbed_sphere},
        {8, "property suites", property_suites},
        {9, "brute-force oracle on 25 quartics", brute_force},
        {10, "direct vs congruent Hessian", convention_invariance},
    };

    int unexpected = 0;
    for (const auto& e : entries) {
        Criterion c;
        double secs = 0;
        try {
            secs = timed([&] { c = e.run(); });
        } catch (const std::exception& ex) {
            c.check(false, std::string("exception: ") + ex.what());
        }
        std::cout << "criterion " << std::setw(2) << e.id << ": " << (c.passed() ? "PASS" : "FAIL") << "  "
                  << e.title << "  [" << fmt(secs) << " s";
        for (const auto& n : c.notes())
            std::cout << "; " << n;
        std::cout << "]\n";
        for (const auto& f : c.failed())
            std::cout << "    failed: " << f << '\n';
        for (const auto& g : c.gaps())
            std::cout << "    reference mismatch: " << g << '\n';
        if (!c.passed() && !c.only_gaps())
            ++unexpected;
    }
    // A criterion failing only against reference data that disagrees with an
    // independent high-precision solution does not fail the run.
    return unexpected == 0 ? 0 : 1;
}
