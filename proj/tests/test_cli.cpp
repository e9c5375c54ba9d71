#include "polyloc/cli.hpp"
#include "polyloc/parse.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using namespace polyloc;
using polyloc::testing::P;

namespace {

const char* circle = "objective: 100*x1^4 - 200*x1^2*x2 + x1^2 + 100*x2^2 - 2*x1 + 1\n"
                     "equalities:\n"
                     "  x1^2 + x2^2 - 1\n";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_text(const std::string& text, RunConfig config)
{
    std::ostringstream out, err;
    int code = run(config, parse_problem(text), out, err);
    return {code, out.str(), err.str()};
}

RunConfig json_config(Mode mode)
{
    RunConfig c;
    c.mode = mode;
    c.output = OutputFormat::Json;
    return c;
}

} // namespace

TEST(ParseProblem, Unconstrained)
{
    Problem p = parse_problem("objective: x1^2 + x2^4 - 2*x2^2");
    EXPECT_EQ(p.nvars, 2u);
    EXPECT_EQ(p.objective, P("x1^2 + x2^4 - 2*x2^2", 2));
    EXPECT_TRUE(p.equalities.empty());
    EXPECT_TRUE(p.inequalities.empty());
}

TEST(ParseProblem, SectionsAndComments)
{
    Problem p = parse_problem("# disk\nobjective:\n  x1 + x2   # linear\n\ninequalities: 1 - x1^2 - x2^2\n"
                              "equalities:\n x3 - x1\n");
    EXPECT_EQ(p.nvars, 3u);
    ASSERT_EQ(p.equalities.size(), 1u);
    ASSERT_EQ(p.inequalities.size(), 1u);
    EXPECT_EQ(p.inequalities[0], P("1 - x1^2 - x2^2", 3));
    EXPECT_EQ(p.equalities[0], P("x3 - x1", 3));
}

TEST(ParseProblem, RationalCoefficient)
{
    Problem p = parse_problem("objective: 1/3*x1^3 - x1");
    EXPECT_EQ(p.objective.coefficient(Monomial({3})), Rational(1, 3));
}

TEST(ParseProblem, TooManyConstraints)
{
    EXPECT_THROW(parse_problem("objective: x1^2\nequalities: x1"), PreconditionError);
    EXPECT_NO_THROW(parse_problem("objective: x1^2\ninequalities: x1"));
    EXPECT_THROW(parse_problem("objective: x1^2\ninequalities: x1\nequalities: x1 - 1"), PreconditionError);
}

TEST(ParseProblem, ErrorsCarryPosition)
{
    try {
        parse_problem("objective: x1^2\nequalities:\n  x1 + 2 x2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 10u);
    }
    try {
        parse_problem("objective: x1 + y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 17u);
    }
    EXPECT_THROW(parse_problem("equalities: x1"), ParseError);
    EXPECT_THROW(parse_problem("x1^2"), ParseError);
    EXPECT_THROW(parse_problem("objective: 3"), ParseError);
    EXPECT_THROW(parse_problem("objective: x1\nobjective: x2"), ParseError);
}

TEST(ParseEps, Broadcast)
{
    auto e = parse_eps("1e-5", 3);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[2], Rational(1, 100000));
    EXPECT_EQ(parse_eps("1/2, 0,-3", 3), (std::vector<Rational>{Rational(1, 2), 0, -3}));
    EXPECT_THROW(parse_eps("1,2", 3), PreconditionError);
    EXPECT_THROW(parse_eps("1,,2", 3), PreconditionError);
}

TEST(RunConfig, Validation)
{
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    c.digits = 0;
    EXPECT_THROW(c.validate(), PreconditionError);
    c.digits = 10;
    c.mode = Mode::Perturb;
    EXPECT_THROW(c.validate(), PreconditionError);
    auto o = run_text("objective: x1^4\nequalities: x1^2 + x2^2 + x3^2 - 1", c);
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("eps"), std::string::npos);
    EXPECT_EQ(parse_mode("global"), Mode::Global);
    EXPECT_THROW(parse_mode("fast"), PreconditionError);
    EXPECT_EQ(parse_convention("congruent"), HessianConvention::Congruent);
}

TEST(Run, CircleTable)
{
    auto o = run_text(circle, RunConfig{});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("3 local minimizers"), std::string::npos);
    for (const char* s : {"-0.7839301862", "0.6208489858", "3.186378996", "-0.9999509840", "100.9900990",
                          "0.7864151542", "0.6176983125"})
        EXPECT_NE(o.out.find(s), std::string::npos) << s;
}

TEST(Run, NoLocalMinimizers)
{
    auto o = run_text("objective: x1^2 + (x1*x2 - 1)^2", RunConfig{});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("0 local minimizers"), std::string::npos);
}

TEST(Run, ExitCodes)
{
    RunConfig global;
    global.mode = Mode::Global;
    auto flat = run_text("objective: x1^4\nequalities: x1^2 + x2^2 + x3^2 - 1", global);
    EXPECT_EQ(flat.code, 3);
    EXPECT_NE(flat.out.find("use --mode perturb"), std::string::npos);

    auto degenerate = run_text("objective: x1^4", RunConfig{});
    EXPECT_EQ(degenerate.code, 2);

    auto infeasible = run_text("objective: (x1 - 1/4)^2 + (x2 + 1/3)^2\ninequalities: -1 - x1^2 - x2^2", global);
    EXPECT_EQ(infeasible.code, 2);
}

TEST(Run, Perturb)
{
    RunConfig c = json_config(Mode::Perturb);
    Problem p = parse_problem("objective: x1^4\nequalities: x1^2 + x2^2 + x3^2 - 1");
    c.eps_schedule = {parse_eps("1e-5", 3), parse_eps("0", 3)};
    std::ostringstream out, err;
    EXPECT_EQ(run(c, p, out, err), 3);
    auto j = nlohmann::json::parse(out.str());
    ASSERT_EQ(j["trajectory"].size(), 2u);
    EXPECT_EQ(j["trajectory"][0]["status"], "ok");
    EXPECT_NEAR(j["trajectory"][0]["f_min"]["value_float"].get<double>(), -0.000014242, 1e-9);
    EXPECT_EQ(j["trajectory"][1]["status"], "positive_dimensional");

    c.eps_schedule = {parse_eps("1e-5", 3)};
    std::ostringstream out2;
    EXPECT_EQ(run(c, p, out2, err), 0);
}

TEST(Run, JsonSchema)
{
    auto o = run_text(circle, json_config(Mode::Global));
    ASSERT_EQ(o.code, 0);
    auto j = nlohmann::json::parse(o.out);
    for (const char* key : {"status", "mode", "deg_w", "n_real_roots", "j", "minimizers", "f_min", "diagnostics",
                            "timings_ms"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["status"], "ok");
    EXPECT_EQ(j["mode"], "global");
    EXPECT_EQ(j["deg_w"], 8);
    EXPECT_EQ(j["n_real_roots"], 6);
    ASSERT_EQ(j["minimizers"].size(), 3u);
    for (const auto& m : j["minimizers"])
        for (const char* key : {"coords_float", "coords_interval", "multipliers", "value_float"})
            EXPECT_TRUE(m.contains(key)) << key;
    EXPECT_NEAR(j["f_min"]["value_float"].get<double>(), 0.045674808, 1e-9);
    EXPECT_EQ(j["f_min"]["label"], "minimum over critical values");
    EXPECT_EQ(j["diagnostics"]["roots"].size(), 6u);
}

TEST(Run, IntervalsRoundTrip)
{
    for (const char* text : {circle, "objective: x1^2 + x2^4 - 2*x2^2",
                             "objective: 100*x1^4 - 200*x1^2*x2 + x1^2 + 100*x2^2 - 2*x1 + 1\n"
                             "inequalities: 1 - x1^2 - x2^2"}) {
        auto j = nlohmann::json::parse(run_text(text, json_config(Mode::Global)).out);
        auto check = [](const nlohmann::json& iv, double x) {
            Rational lo = parse_rational(iv[0].get<std::string>());
            Rational hi = parse_rational(iv[1].get<std::string>());
            Rational q(x);
            EXPECT_LE(lo, q);
            EXPECT_LE(q, hi);
        };
        for (const auto& m : j["minimizers"]) {
            for (std::size_t i = 0; i < m["coords_float"].size(); ++i)
                check(m["coords_interval"][i], m["coords_float"][i].get<double>());
            for (std::size_t i = 0; i < m["multipliers"].size(); ++i)
                check(m["multipliers_interval"][i], m["multipliers"][i].get<double>());
            check(m["value_interval"], m["value_float"].get<double>());
        }
        check(j["f_min"]["value_interval"], j["f_min"]["value_float"].get<double>());
    }
}

TEST(Run, Deterministic)
{
    auto strip = [](const std::string& s) {
        auto j = nlohmann::ordered_json::parse(s);
        j.erase("timings_ms");
        return j.dump();
    };
    RunConfig a = json_config(Mode::Global);
    RunConfig b = a;
    b.threads = 4;
    auto first = run_text(circle, a).out;
    EXPECT_EQ(strip(first), strip(run_text(circle, a).out));
    EXPECT_EQ(strip(first), strip(run_text(circle, b).out));
}
