#include "polyloc/parse.hpp"

#include <cctype>
#include <sstream>

namespace polyloc {

VariableNames VariableNames::standard(std::size_t n, std::size_t slack, std::size_t multipliers)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= slack; ++i)
        names.push_back("z" + std::to_string(i));
    for (std::size_t i = 1; i <= multipliers; ++i)
        names.push_back("lambda" + std::to_string(i));
    return VariableNames(std::move(names));
}

VariableNames VariableNames::transformed(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("y" + std::to_string(i));
    return VariableNames(std::move(names));
}

std::optional<std::size_t> VariableNames::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    Lexer(std::string_view text, std::size_t line, std::size_t column) : text_(text), line_(line), column_(column) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, column_});
                return out;
            }
            const std::size_t line = line_;
            const std::size_t col = column_;
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back({Tok::Number, lex_number(), line, col});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string ident;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ident.push_back(advance());
                out.push_back({Tok::Ident, ident, line, col});
            } else {
                Tok kind;
                switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
                }
                advance();
                out.push_back({kind, std::string(1, c), line, col});
            }
        }
    }

private:
    char advance()
    {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool digit_at(std::size_t p) const
    {
        return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
    }

    std::string lex_number()
    {
        std::string s;
        while (digit_at(pos_) || (pos_ < text_.size() && text_[pos_] == '.'))
            s.push_back(advance());
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-'))
                ++look;
            if (digit_at(look)) {
                while (pos_ < look)
                    s.push_back(advance());
                while (digit_at(pos_))
                    s.push_back(advance());
            }
        } else if (pos_ < text_.size() && text_[pos_] == '/' && digit_at(pos_ + 1)) {
            s.push_back(advance());
            while (digit_at(pos_))
                s.push_back(advance());
        }
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const VariableNames& names) : toks_(std::move(tokens)), names_(names) {}

    MPoly parse()
    {
        MPoly p = expr();
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "' (implicit multiplication is not allowed)");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, peek().line, peek().column);
    }

    MPoly expr()
    {
        MPoly acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            MPoly rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    MPoly term()
    {
        MPoly acc = unary();
        while (peek().kind == Tok::Star) {
            next();
            acc = acc * unary();
        }
        return acc;
    }

    MPoly unary()
    {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    MPoly power()
    {
        MPoly base = atom();
        if (peek().kind == Tok::Caret) {
            next();
            if (peek().kind != Tok::Number)
                fail("exponent must be a non-negative integer");
            const Token& tok = next();
            for (char c : tok.text)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("exponent must be a non-negative integer", tok.line, tok.column);
            if (tok.text.size() > 6)
                throw ParseError("exponent too large", tok.line, tok.column);
            base = base.pow(static_cast<unsigned>(std::stoul(tok.text)));
            if (peek().kind == Tok::Caret)
                fail("chained exponents need parentheses");
        }
        return base;
    }

    MPoly atom()
    {
        const std::size_t n = names_.size();
        switch (peek().kind) {
        case Tok::Number: {
            const Token& tok = next();
            try {
                return MPoly(n, parse_rational(tok.text));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), tok.line, tok.column);
            }
        }
        case Tok::Ident: {
            const Token& tok = next();
            auto idx = names_.index_of(tok.text);
            if (!idx)
                throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.column);
            return MPoly::variable(n, *idx);
        }
        case Tok::LParen: {
            next();
            MPoly inner = expr();
            if (peek().kind != Tok::RParen)
                fail("expected ')'");
            next();
            return inner;
        }
        case Tok::End:
            fail("unexpected end of input");
        default:
            fail("unexpected '" + peek().text + "'");
        }
    }

    std::vector<Token> toks_;
    const VariableNames& names_;
    std::size_t pos_ = 0;
};

std::optional<std::size_t> x_index(const std::string& ident)
{
    if (ident.size() < 2 || ident[0] != 'x' || ident[1] == '0')
        return std::nullopt;
    for (std::size_t i = 1; i < ident.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(ident[i])))
            return std::nullopt;
    if (ident.size() > 6)
        return std::nullopt;
    return std::stoul(ident.substr(1));
}

void append_coefficient_and_monomial(std::ostringstream& out, const Rational& c, const std::string& mono, bool first)
{
    Rational mag = abs(c);
    if (first) {
        if (c < 0)
            out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        out << mag.get_str();
        return;
    }
    if (mag != 1)
        out << mag.get_str() << "*";
    out << mono;
}

} // namespace

MPoly parse_polynomial(std::string_view text, const VariableNames& names, std::size_t first_line,
                       std::size_t first_column)
{
    Lexer lexer(text, first_line, first_column);
    Parser parser(lexer.run(), names);
    return parser.parse();
}

UPoly parse_upoly(std::string_view text)
{
    VariableNames t_only(std::vector<std::string>{"t"});
    MPoly p = parse_polynomial(text, t_only);
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : p.terms()) {
        if (coeffs.size() <= m[0])
            coeffs.resize(m[0] + 1, Rational(0));
        coeffs[m[0]] = c;
    }
    return UPoly(std::move(coeffs));
}

std::size_t max_x_index(std::string_view text, std::size_t first_line, std::size_t first_column)
{
    Lexer lexer(text, first_line, first_column);
    std::size_t max_index = 0;
    for (const auto& tok : lexer.run()) {
        if (tok.kind != Tok::Ident)
            continue;
        auto idx = x_index(tok.text);
        if (!idx)
            throw ParseError("unknown variable '" + tok.text + "' (objective and constraints use x1, x2, ...)",
                             tok.line, tok.column);
        max_index = std::max(max_index, *idx);
    }
    return max_index;
}

std::string to_string(const MPoly& p, const VariableNames& names)
{
    if (names.size() != p.nvars())
        throw DimensionError("printer has " + std::to_string(names.size()) + " names for " +
                             std::to_string(p.nvars()) + " variables");
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        append_coefficient_and_monomial(out, c, mono, first);
        first = false;
    }
    return out.str();
}

std::string to_string(const MPoly& p)
{
    return to_string(p, VariableNames::standard(p.nvars()));
}

std::string to_string(const UPoly& p, std::string_view var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k] == 0)
            continue;
        std::string mono;
        if (k >= 1)
            mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
        append_coefficient_and_monomial(out, cs[k], mono, first);
        first = false;
    }
    return out.str();
}

} // namespace polyloc
