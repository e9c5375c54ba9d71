#ifndef POLYLOC_PARSE_HPP
#define POLYLOC_PARSE_HPP

#include "polyloc/mpoly.hpp"
#include "polyloc/upoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyloc {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Variable names in ring order.
class VariableNames {
public:
    VariableNames() = default;
    explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

    // x1..xn, then z1..zs, then lambda1..lambdam.
    static VariableNames standard(std::size_t n, std::size_t slack = 0, std::size_t multipliers = 0);
    // y1..yn, the coordinates after a change of variables.
    static VariableNames transformed(std::size_t n);

    std::size_t size() const { return names_.size(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

// Grammar: + - * ^, parentheses, integer / p/q / decimal literals. Juxtaposition
// is rejected. Line and column in errors are 1-based and offset by the given origin.
MPoly parse_polynomial(std::string_view text, const VariableNames& names, std::size_t first_line = 1,
                       std::size_t first_column = 1);

// Univariate polynomial in t.
UPoly parse_upoly(std::string_view text);

// Largest k such that "xk" occurs as an identifier (0 when none); any other
// identifier is a ParseError.
std::size_t max_x_index(std::string_view text, std::size_t first_line = 1, std::size_t first_column = 1);

std::string to_string(const MPoly& p, const VariableNames& names);
std::string to_string(const MPoly& p);
std::string to_string(const UPoly& p, std::string_view var = "t");

} // namespace polyloc

#endif
