#ifndef POLYLOC_SOLVE_HPP
#define POLYLOC_SOLVE_HPP

#include "polyloc/certify.hpp"
#include "polyloc/mpoly.hpp"
#include "polyloc/realroots.hpp"
#include "polyloc/shape.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyloc {

enum class Status { Ok, PreconditionFailed, PositiveDimensional };

std::string to_string(Status s);

struct Problem {
    MPoly objective;
    std::vector<MPoly> equalities;
    std::vector<MPoly> inequalities;
    std::size_t nvars = 0;
    // Slack variables of former inequalities, appended after x.
    std::size_t slack = 0;

    std::size_t original_nvars() const { return nvars - slack; }
};

struct Lagrangian {
    MPoly l;
    std::size_t n = 0;
    std::size_t m = 0;
};

// L = f + sum lambda_j h_j with the multipliers appended after the x block.
Lagrangian build_lagrangian(const MPoly& f, const std::vector<MPoly>& h);

// Inequalities g_j >= 0 become equalities g_j - z_j^2 = 0 in n + #g variables.
Problem slack_transform(const MPoly& f, const std::vector<MPoly>& g, const std::vector<MPoly>& h = {});

struct SolveOptions {
    HessianConvention convention = HessianConvention::Direct;
    int digits = 10;
    unsigned threads = 1;
    bool assume_attained = false;
};

// One coordinate (or value) of a point parametrized by a root of w.
struct Coordinate {
    UPoly poly;
    Interval enclosure;
    double approx = 0;
    std::string decimal;
    std::optional<Rational> exact;
};

struct Minimizer {
    std::size_t root_index = 0;
    AlgebraicNumber root;
    std::vector<Coordinate> coords;
    std::vector<Coordinate> multipliers;
    Coordinate value;
};

enum class RootClass { Minimizer, NotMinimizer, Undecided, ConstraintQualificationFailed };

std::string to_string(RootClass c);

struct RootDiagnostic {
    std::size_t index = 0;
    double t = 0;
    RootClass classification = RootClass::NotMinimizer;
    int det_sign = 0;
    std::optional<Rational> det_exact;
    double det_approx = 0;
    std::vector<int> minor_signs;
    std::optional<std::size_t> witness;
    std::vector<std::size_t> pivot_columns;
};

struct Diagnostics {
    bool zero_dimensional = false;
    // Unset when no representation was built.
    std::optional<bool> det_nonvanishing;
    std::optional<bool> constraint_qualification;
    std::size_t j = 0;
    std::size_t deg_w = 0;
    std::size_t n_real_roots = 0;
    std::size_t multiplicity_dimension = 0;
    std::optional<std::size_t> bezout_bound;
    Rational max_residual;
    std::vector<RootDiagnostic> roots;
    std::vector<std::string> messages;
    std::map<std::string, double> timings_ms;
};

struct GlobalMinimum {
    UPoly r;
    Coordinate value;
    // Indices into the real roots of w attaining the minimum.
    std::vector<std::size_t> argmin;
    std::vector<Minimizer> points;
    // False: only the minimum over real critical values (attainment not asserted).
    bool attained = false;
};

struct SolveReport {
    Status status = Status::Ok;
    std::string hint;
    std::vector<Minimizer> minimizers;
    std::optional<UnivariateRep> rep;
    std::optional<GlobalMinimum> f_min;
    Diagnostics diagnostics;
    // Number of x coordinates reported per point.
    std::size_t n = 0;
};

struct PreconditionReport {
    bool zero_dimensional = false;
    std::optional<bool> det_nonvanishing;
    // Real roots of w where det(Hess f) vanishes.
    std::vector<std::size_t> det_witnesses;
};

PreconditionReport check_preconditions_unconstrained(const MPoly& f, const SolveOptions& opt = {});

SolveReport grulom(const MPoly& f, const SolveOptions& opt = {});
SolveReport grulom_plus(const MPoly& f, const SolveOptions& opt = {});
SolveReport gralom(const MPoly& f, const std::vector<MPoly>& h, const SolveOptions& opt = {});
SolveReport gralom_plus(const MPoly& f, const std::vector<MPoly>& h, const SolveOptions& opt = {});
SolveReport solve_inequalities(const MPoly& f, const std::vector<MPoly>& g, const std::vector<MPoly>& h = {},
                               const SolveOptions& opt = {}, bool global = false);

struct PerturbationStep {
    std::vector<Rational> eps;
    SolveReport report;
    std::string error;
};

// Runs gralom_plus on f + eps^T x for every eps in the schedule.
std::vector<PerturbationStep> perturb_solve(const MPoly& f, const std::vector<MPoly>& h,
                                            const std::vector<std::vector<Rational>>& schedule,
                                            const SolveOptions& opt = {});

// For each root a of w, the index of g(a) among the sorted real roots of the
// minimal polynomial of g in Q[t]/(w). Equal ranks mean equal values.
std::vector<std::size_t> value_ranks(const UPoly& g, const UPoly& w, std::vector<AlgebraicNumber>& roots);

} // namespace polyloc

#endif
