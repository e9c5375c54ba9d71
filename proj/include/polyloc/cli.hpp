#ifndef POLYLOC_CLI_HPP
#define POLYLOC_CLI_HPP

#include "polyloc/solve.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace polyloc {

enum class Mode { Local, Global, Inequality, Perturb };
enum class OutputFormat { Table, Json };

std::string to_string(Mode m);
Mode parse_mode(std::string_view s);
HessianConvention parse_convention(std::string_view s);

struct RunConfig {
    Mode mode = Mode::Local;
    int digits = 10;
    bool assume_attained = false;
    std::vector<std::vector<Rational>> eps_schedule;
    OutputFormat output = OutputFormat::Table;
    HessianConvention hessian_convention = HessianConvention::Direct;
    unsigned threads = 1;

    // Throws PreconditionError.
    void validate() const;
};

// Sections "objective:", "equalities:", "inequalities:"; one polynomial per
// line, either after the header or on the following lines. '#' starts a comment.
Problem parse_problem(std::string_view text);

// "a,b,c" or a single value broadcast to n components.
std::vector<Rational> parse_eps(std::string_view text, std::size_t n);

// Exit code for a report status.
int exit_code(Status s);

// Writes the report and returns the exit code. Errors are reported on `err`.
int run(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err);

} // namespace polyloc

#endif
