#include "polyloc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"polyloc: certified local and global minimizers of polynomials"};
    app.require_subcommand(1);
    app.footer("Exit codes:\n"
               "  0  ok\n"
               "  1  parse, configuration or internal error\n"
               "  2  precondition failed (degenerate Hessian, constraint qualification, no real critical points)\n"
               "  3  positive-dimensional critical set; try --mode perturb\n"
               "In perturb mode the code is that of the first step that is not ok.");

    auto* solve = app.add_subcommand("solve", "solve a problem file");
    std::string input, mode = "local", hessian = "direct";
    int digits = 10;
    bool assume_attained = false, json = false;
    unsigned threads = 1;
    std::vector<std::string> eps;
    solve->add_option("--input", input, "problem file (sections objective:, equalities:, inequalities:)")
        ->required()
        ->check(CLI::ExistingFile);
    solve->add_option("--mode", mode, "local | global | inequality | perturb")
        ->check(CLI::IsMember({"local", "global", "inequality", "perturb"}));
    solve->add_option("--digits", digits, "printed significant digits")->check(CLI::PositiveNumber);
    solve->add_flag("--assume-attained", assume_attained, "treat the minimum over critical values as the global minimum");
    solve->add_option("--eps", eps,
                      "perturbation e1,e2,...,en; a single value is used for every coordinate; repeat for a schedule");
    solve->add_flag("--json", json, "JSON output");
    solve->add_option("--hessian", hessian, "direct | congruent")->check(CLI::IsMember({"direct", "congruent"}));
    solve->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(input);
        std::stringstream buf;
        buf << in.rdbuf();
        polyloc::Problem problem = polyloc::parse_problem(buf.str());

        polyloc::RunConfig config;
        config.mode = polyloc::parse_mode(mode);
        config.digits = digits;
        config.assume_attained = assume_attained;
        config.output = json ? polyloc::OutputFormat::Json : polyloc::OutputFormat::Table;
        config.hessian_convention = polyloc::parse_convention(hessian);
        config.threads = threads;
        for (const auto& e : eps)
            config.eps_schedule.push_back(polyloc::parse_eps(e, problem.original_nvars()));
        return polyloc::run(config, problem, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
