#include "polyloc/cli.hpp"

#include "polyloc/parse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace polyloc {

using nlohmann::ordered_json;

std::string to_string(Mode m)
{
    switch (m) {
    case Mode::Local:
        return "local";
    case Mode::Global:
        return "global";
    case Mode::Inequality:
        return "inequality";
    case Mode::Perturb:
        return "perturb";
    }
    return "?";
}

Mode parse_mode(std::string_view s)
{
    for (Mode m : {Mode::Local, Mode::Global, Mode::Inequality, Mode::Perturb})
        if (s == to_string(m))
            return m;
    throw PreconditionError("unknown mode '" + std::string(s) + "'");
}

HessianConvention parse_convention(std::string_view s)
{
    if (s == "direct")
        return HessianConvention::Direct;
    if (s == "congruent")
        return HessianConvention::Congruent;
    throw PreconditionError("unknown Hessian convention '" + std::string(s) + "'");
}

void RunConfig::validate() const
{
    if (digits < 1)
        throw PreconditionError("digits must be at least 1");
    if (threads < 1)
        throw PreconditionError("threads must be at least 1");
    if (mode == Mode::Perturb && eps_schedule.empty())
        throw PreconditionError("perturb mode needs an eps schedule");
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

struct Entry {
    std::string text;
    std::size_t line;
    std::size_t column;
};

} // namespace

Problem parse_problem(std::string_view text)
{
    enum Section { None, Objective, Equalities, Inequalities };
    std::vector<Entry> sections[4];
    Section current = None;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (trim(line).empty())
            continue;

        std::size_t offset = 0;
        std::string_view body = trim(line);
        for (auto [name, sec] : {std::pair{"objective:", Objective}, std::pair{"equalities:", Equalities},
                                 std::pair{"inequalities:", Inequalities}}) {
            std::string_view head(name);
            if (body.substr(0, head.size()) == head) {
                current = sec;
                offset = line.find(head) + head.size();
                break;
            }
        }
        std::string_view rest = line.substr(offset);
        if (trim(rest).empty())
            continue;
        if (current == None)
            throw ParseError("expected a section header", lineno, line.find_first_not_of(" \t") + 1);
        sections[current].push_back({std::string(rest), lineno, offset + 1});
    }

    if (sections[Objective].empty())
        throw ParseError("missing objective", lineno, 1);
    if (sections[Objective].size() > 1) {
        const Entry& e = sections[Objective][1];
        throw ParseError("more than one objective", e.line, e.column);
    }

    std::size_t n = 0;
    for (const auto& sec : sections)
        for (const auto& e : sec)
            n = std::max(n, max_x_index(e.text, e.line, e.column));
    if (n == 0) {
        const Entry& e = sections[Objective][0];
        throw ParseError("no variables x1..xn occur", e.line, e.column);
    }

    VariableNames names = VariableNames::standard(n);
    auto parse_all = [&](Section s) {
        std::vector<MPoly> out;
        for (const auto& e : sections[s])
            out.push_back(parse_polynomial(e.text, names, e.line, e.column));
        return out;
    };

    Problem p;
    p.nvars = n;
    p.objective = parse_polynomial(sections[Objective][0].text, names, sections[Objective][0].line,
                                   sections[Objective][0].column);
    p.equalities = parse_all(Equalities);
    p.inequalities = parse_all(Inequalities);

    const std::size_t m = p.equalities.size() + p.inequalities.size();
    const std::size_t total = n + p.inequalities.size();
    if (m >= total)
        throw PreconditionError(std::to_string(m) + " constraints in " + std::to_string(total) +
                                " variables after slack expansion; need fewer constraints than variables");
    return p;
}

std::vector<Rational> parse_eps(std::string_view text, std::size_t n)
{
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view item = trim(text.substr(pos, end - pos));
        if (item.empty())
            throw PreconditionError("empty eps component in '" + std::string(text) + "'");
        out.push_back(parse_rational(item));
        pos = end + 1;
    }
    if (out.size() == 1)
        out.assign(n, out[0]);
    if (out.size() != n)
        throw PreconditionError("eps '" + std::string(text) + "' has " + std::to_string(out.size()) +
                                " components, expected " + std::to_string(n));
    return out;
}

int exit_code(Status s)
{
    switch (s) {
    case Status::Ok:
        return 0;
    case Status::PreconditionFailed:
        return 2;
    case Status::PositiveDimensional:
        return 3;
    }
    return 1;
}

namespace {

ordered_json interval_json(const Interval& iv)
{
    return ordered_json::array({to_string(iv.lo), to_string(iv.hi)});
}

ordered_json minimizer_json(const Minimizer& m)
{
    ordered_json j;
    j["root_index"] = m.root_index;
    j["t_interval"] = interval_json(m.root.interval());
    ordered_json cf = ordered_json::array(), ci = ordered_json::array(), cd = ordered_json::array(),
                 ce = ordered_json::array();
    for (const auto& c : m.coords) {
        cf.push_back(c.approx);
        ci.push_back(interval_json(c.enclosure));
        cd.push_back(c.decimal);
        ce.push_back(c.exact ? ordered_json(to_string(*c.exact)) : ordered_json(nullptr));
    }
    j["coords_float"] = cf;
    j["coords_interval"] = ci;
    j["coords_decimal"] = cd;
    j["coords_exact"] = ce;
    ordered_json mf = ordered_json::array(), mi = ordered_json::array();
    for (const auto& c : m.multipliers) {
        mf.push_back(c.approx);
        mi.push_back(interval_json(c.enclosure));
    }
    j["multipliers"] = mf;
    j["multipliers_interval"] = mi;
    j["value_float"] = m.value.approx;
    j["value_interval"] = interval_json(m.value.enclosure);
    j["value_decimal"] = m.value.decimal;
    return j;
}

ordered_json diagnostics_json(const Diagnostics& d)
{
    auto opt_bool = [](const std::optional<bool>& b) { return b ? ordered_json(*b) : ordered_json(nullptr); };
    ordered_json j;
    j["zero_dimensional"] = d.zero_dimensional;
    j["det_nonvanishing"] = opt_bool(d.det_nonvanishing);
    j["constraint_qualification"] = opt_bool(d.constraint_qualification);
    j["multiplicity_dimension"] = d.multiplicity_dimension;
    j["bezout_bound"] = d.bezout_bound ? ordered_json(*d.bezout_bound) : ordered_json(nullptr);
    j["max_residual"] = to_decimal(d.max_residual, 3);
    ordered_json roots = ordered_json::array();
    for (const auto& r : d.roots) {
        ordered_json rj;
        rj["index"] = r.index;
        rj["t"] = r.t;
        rj["classification"] = to_string(r.classification);
        rj["det_sign"] = r.det_sign;
        rj["det_exact"] = r.det_exact ? ordered_json(to_string(*r.det_exact)) : ordered_json(nullptr);
        rj["det_float"] = r.det_approx;
        rj["minor_signs"] = r.minor_signs;
        rj["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
        rj["pivot_columns"] = r.pivot_columns;
        roots.push_back(rj);
    }
    j["roots"] = roots;
    j["messages"] = d.messages;
    return j;
}

std::string fmin_label(const GlobalMinimum& g)
{
    return g.attained ? "minimum" : "minimum over critical values";
}

ordered_json report_json(const SolveReport& r)
{
    ordered_json j;
    j["status"] = to_string(r.status);
    j["hint"] = r.hint;
    j["n"] = r.n;
    j["w"] = r.rep ? ordered_json(to_string(r.rep->w)) : ordered_json(nullptr);
    j["deg_w"] = r.diagnostics.deg_w;
    j["n_real_roots"] = r.diagnostics.n_real_roots;
    j["j"] = r.diagnostics.j;
    ordered_json mins = ordered_json::array();
    for (const auto& m : r.minimizers)
        mins.push_back(minimizer_json(m));
    j["minimizers"] = mins;
    if (r.f_min) {
        const GlobalMinimum& g = *r.f_min;
        ordered_json fj;
        fj["label"] = fmin_label(g);
        fj["attained"] = g.attained;
        fj["value_float"] = g.value.approx;
        fj["value_interval"] = interval_json(g.value.enclosure);
        fj["value_decimal"] = g.value.decimal;
        fj["value_exact"] = g.value.exact ? ordered_json(to_string(*g.value.exact)) : ordered_json(nullptr);
        fj["r"] = to_string(g.r);
        fj["argmin"] = g.argmin;
        ordered_json pts = ordered_json::array();
        for (const auto& m : g.points)
            pts.push_back(minimizer_json(m));
        fj["points"] = pts;
        j["f_min"] = fj;
    } else {
        j["f_min"] = nullptr;
    }
    j["diagnostics"] = diagnostics_json(r.diagnostics);
    return j;
}

std::string pad(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

void write_rows(std::ostream& out, const std::vector<Minimizer>& ms, std::size_t n, std::size_t nmult,
                int digits)
{
    const std::size_t w = static_cast<std::size_t>(digits) + 9;
    out << pad("#", 4);
    for (std::size_t i = 0; i < n; ++i)
        out << ' ' << pad("x" + std::to_string(i + 1), w);
    for (std::size_t i = 0; i < nmult; ++i)
        out << ' ' << pad("lambda" + std::to_string(i + 1), w);
    out << ' ' << pad("f", w) << '\n';
    for (std::size_t k = 0; k < ms.size(); ++k) {
        out << pad(std::to_string(k + 1), 4);
        for (const auto& c : ms[k].coords)
            out << ' ' << pad(c.decimal, w);
        for (const auto& c : ms[k].multipliers)
            out << ' ' << pad(c.decimal, w);
        out << ' ' << pad(ms[k].value.decimal, w) << '\n';
    }
}

void write_table(std::ostream& out, const SolveReport& r, Mode mode, int digits)
{
    out << "status: " << to_string(r.status) << '\n';
    if (!r.hint.empty())
        out << "hint: " << r.hint << '\n';
    if (r.rep)
        out << "deg w: " << r.diagnostics.deg_w << "   real roots: " << r.diagnostics.n_real_roots
            << "   j: " << r.diagnostics.j << '\n';
    if (r.status == Status::PositiveDimensional)
        return;
    const std::size_t nmult = r.minimizers.empty() ? 0 : r.minimizers[0].multipliers.size();
    const std::size_t count = r.minimizers.size();
    out << count << " local minimizer" << (count == 1 ? "" : "s") << '\n';
    if (count > 0)
        write_rows(out, r.minimizers, r.n, nmult, digits);
    if (r.f_min && mode != Mode::Local) {
        const GlobalMinimum& g = *r.f_min;
        out << "f_min (" << fmin_label(g) << "): " << g.value.decimal << " at " << g.points.size() << " point"
            << (g.points.size() == 1 ? "" : "s") << '\n';
        if (!g.points.empty())
            write_rows(out, g.points, r.n, g.points[0].multipliers.size(), digits);
    }
    for (const auto& m : r.diagnostics.messages)
        out << "note: " << m << '\n';
}

ordered_json timings_json(const Diagnostics& d)
{
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : d.timings_ms)
        t[k] = v;
    return t;
}

int run_perturb(const RunConfig& config, const Problem& problem, const SolveOptions& opt, std::ostream& out)
{
    if (!problem.inequalities.empty())
        throw PreconditionError("perturb mode does not take inequalities");
    auto start = std::chrono::steady_clock::now();
    auto steps = perturb_solve(problem.objective, problem.equalities, config.eps_schedule, opt);
    double total =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    int code = 0;
    for (const auto& s : steps) {
        int c = s.error.empty() ? exit_code(s.report.status) : 1;
        if (c != 0) {
            code = c;
            break;
        }
    }

    if (config.output == OutputFormat::Json) {
        ordered_json j;
        j["status"] = code == 0 ? "ok" : code == 2 ? "precondition_failed" : code == 3 ? "positive_dimensional" : "error";
        j["mode"] = to_string(Mode::Perturb);
        ordered_json traj = ordered_json::array();
        ordered_json timings = ordered_json::object();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto& s = steps[i];
            ordered_json sj;
            ordered_json eps = ordered_json::array();
            for (const auto& e : s.eps)
                eps.push_back(to_string(e));
            sj["eps"] = eps;
            sj["error"] = s.error;
            if (s.error.empty()) {
                sj.update(report_json(s.report));
                timings[std::to_string(i)] = timings_json(s.report.diagnostics);
            }
            traj.push_back(sj);
        }
        j["trajectory"] = traj;
        timings["total"] = total;
        j["timings_ms"] = timings;
        out << j.dump(2) << '\n';
        return code;
    }

    const std::size_t n = problem.original_nvars();
    const std::size_t w = static_cast<std::size_t>(config.digits) + 9;
    out << pad("eps", 14) << ' ' << pad("status", 20);
    for (std::size_t i = 0; i < n; ++i)
        out << ' ' << pad("x" + std::to_string(i + 1), w);
    out << ' ' << pad("f", w) << '\n';
    for (const auto& s : steps) {
        std::string eps = s.eps.empty() ? "" : to_decimal(s.eps[0], 3);
        bool uniform = std::all_of(s.eps.begin(), s.eps.end(), [&](const Rational& e) { return e == s.eps[0]; });
        if (!uniform)
            eps += ",...";
        out << pad(eps, 14) << ' ';
        if (!s.error.empty()) {
            out << pad("error", 20) << "  " << s.error << '\n';
            continue;
        }
        out << pad(to_string(s.report.status), 20);
        const auto& fm = s.report.f_min;
        if (s.report.status == Status::Ok && fm && !fm->points.empty()) {
            for (std::size_t p = 0; p < fm->points.size(); ++p) {
                if (p > 0)
                    out << '\n' << pad("", 35);
                for (const auto& c : fm->points[p].coords)
                    out << ' ' << pad(c.decimal, w);
                out << ' ' << pad(fm->value.decimal, w);
            }
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i].error.empty() && !steps[i].report.hint.empty()) {
            out << "hint: " << steps[i].report.hint << '\n';
            break;
        }
    return code;
}

} // namespace

int run(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err)
{
    try {
        config.validate();
        SolveOptions opt;
        opt.convention = config.hessian_convention;
        opt.digits = config.digits;
        opt.threads = config.threads;
        opt.assume_attained = config.assume_attained;

        if (config.mode == Mode::Perturb)
            return run_perturb(config, problem, opt, out);

        const auto& f = problem.objective;
        const auto& g = problem.inequalities;
        const auto& h = problem.equalities;
        SolveReport r;
        switch (config.mode) {
        case Mode::Local:
            r = g.empty() ? gralom(f, h, opt) : solve_inequalities(f, g, h, opt, false);
            break;
        case Mode::Global:
            r = g.empty() ? gralom_plus(f, h, opt) : solve_inequalities(f, g, h, opt, true);
            break;
        case Mode::Inequality:
            r = g.empty() ? gralom_plus(f, h, opt) : solve_inequalities(f, g, h, opt, true);
            break;
        case Mode::Perturb:
            break;
        }

        if (config.output == OutputFormat::Json) {
            ordered_json j;
            j["status"] = to_string(r.status);
            j["mode"] = to_string(config.mode);
            j.update(report_json(r));
            j["timings_ms"] = timings_json(r.diagnostics);
            out << j.dump(2) << '\n';
        } else {
            write_table(out, r, config.mode, config.digits);
        }
        return exit_code(r.status);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace polyloc
