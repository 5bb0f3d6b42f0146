#include "qseries/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace qseries::dsl {

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : Error("parse error at position " + std::to_string(position) + ": expected " + expected + ", found " + found),
      position_(position), expected_(std::move(expected)), found_(std::move(found))
{
}

std::vector<ExprToken> tokenize(std::string_view src)
{
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({TokenKind::integer, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        TokenKind kind;
        switch (ch) {
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        case ',': kind = TokenKind::comma; break;
        case ';': kind = TokenKind::semicolon; break;
        case '^': kind = TokenKind::caret; break;
        case '/': kind = TokenKind::slash; break;
        case '*': kind = TokenKind::star; break;
        case 'q': kind = TokenKind::q; break;
        case '-': kind = TokenKind::minus; break;
        case '+': kind = TokenKind::plus; break;
        default: throw ParseError(i, "a product token", "'" + std::string(1, ch) + "'");
        }
        out.push_back({kind, std::string(1, ch), i});
        ++i;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view src, std::vector<ExprToken> tokens) : src_(src), tokens_(std::move(tokens)) {}

    ProductExpr run()
    {
        if (tokens_.size() == 1 && tokens_[0].kind == TokenKind::integer && tokens_[0].lexeme == "1") {
            return {};
        }
        ProductExpr expr;
        term(expr, false);
        while (!at_end()) {
            switch (peek().kind) {
            case TokenKind::star:
                advance();
                term(expr, false);
                break;
            case TokenKind::slash:
                advance();
                term(expr, true);
                break;
            case TokenKind::lparen:
                term(expr, false);
                break;
            case TokenKind::caret:
                fail("a single '^' per group (duplicate '^')");
            default:
                fail("'(', '*', '/' or end of input");
            }
        }
        return expr;
    }

private:
    bool at_end() const { return pos_ >= tokens_.size(); }
    const ExprToken& peek() const { return tokens_[pos_]; }
    const ExprToken& advance() { return tokens_[pos_++]; }

    bool accept(TokenKind kind)
    {
        if (!at_end() && peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        if (at_end()) {
            throw ParseError(src_.size(), expected, "end of input");
        }
        throw ParseError(peek().position, expected, "'" + peek().lexeme + "'");
    }

    void expect(TokenKind kind, const char* what)
    {
        if (!accept(kind)) {
            fail(what);
        }
    }

    Exponent uint_value()
    {
        if (at_end() || peek().kind != TokenKind::integer) {
            fail("an unsigned integer");
        }
        const ExprToken& tok = advance();
        Exponent value = 0;
        const auto [ptr, ec] = std::from_chars(tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(), value);
        if (ec != std::errc() || value > std::numeric_limits<int>::max()) {
            throw ParseError(tok.position, "an integer below 2^31", "'" + tok.lexeme + "'");
        }
        return value;
    }

    // 'q' ('^' uint)?
    Exponent q_power()
    {
        expect(TokenKind::q, "'q'");
        return accept(TokenKind::caret) ? uint_value() : 1;
    }

    void term(ProductExpr& expr, bool negate)
    {
        expect(TokenKind::lparen, "'('");
        std::vector<std::pair<int, Exponent>> monomials;
        do {
            int sign = 1;
            if (accept(TokenKind::minus)) {
                sign = -1;
            } else {
                accept(TokenKind::plus);
            }
            if (at_end() || peek().kind != TokenKind::q) {
                fail(monomials.empty() ? "a monomial such as q^2 (empty group)" : "a monomial");
            }
            monomials.emplace_back(sign, q_power());
        } while (accept(TokenKind::comma));
        expect(TokenKind::semicolon, "',' or ';'");
        const std::size_t modulus_pos = at_end() ? src_.size() : peek().position;
        const Exponent modulus = q_power();
        if (modulus == 0) {
            throw ParseError(modulus_pos, "a nonzero modulus", "q^0");
        }
        expect(TokenKind::rparen, "')'");

        int multiplicity = 1;
        if (accept(TokenKind::caret)) {
            const bool neg = accept(TokenKind::minus);
            const std::size_t at = at_end() ? src_.size() : peek().position;
            const Exponent v = uint_value();
            if (v == 0) {
                throw ParseError(at, "a nonzero power", "0");
            }
            multiplicity = static_cast<int>(neg ? -v : v);
        }
        if (negate) {
            multiplicity = -multiplicity;
        }
        for (const auto& [sign, offset] : monomials) {
            expr.factors.push_back(Factor{sign, offset, modulus, multiplicity});
        }
    }

    std::string_view src_;
    std::vector<ExprToken> tokens_;
    std::size_t pos_ = 0;
};

std::string q_text(Exponent e) { return e == 1 ? "q" : "q^" + std::to_string(e); }

std::string group_text(const std::vector<Factor>& group)
{
    std::string out = "(";
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += (group[i].sign < 0 ? "-" : "") + q_text(group[i].offset);
    }
    return out + ";" + q_text(group.front().modulus) + ")";
}

} // namespace

ProductExpr parse(std::string_view src)
{
    auto tokens = tokenize(src);
    if (tokens.empty()) {
        throw ParseError(src.size(), "'('", "end of input");
    }
    return Parser(src, std::move(tokens)).run();
}

std::string format(const ProductExpr& expr)
{
    const ProductExpr norm = normalize(expr);
    if (norm.factors.empty()) {
        return "1";
    }
    std::vector<std::vector<Factor>> groups;
    for (const auto& f : norm.factors) {
        if (groups.empty() || groups.back().front().modulus != f.modulus ||
            groups.back().front().multiplicity != f.multiplicity) {
            groups.emplace_back();
        }
        groups.back().push_back(f);
    }
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const int mult = groups[i].front().multiplicity;
        const int power = std::abs(mult);
        if (mult < 0 && i == 0) {
            // Nothing to divide: spell the power out.
            out += group_text(groups[i]) + "^-" + std::to_string(power);
            continue;
        }
        if (mult < 0) {
            out += "/";
        }
        out += group_text(groups[i]);
        if (power != 1) {
            out += "^" + std::to_string(power);
        }
    }
    return out;
}

std::string caret_diagnostic(std::string_view src, const ParseError& err)
{
    return std::string(src) + "\n" + std::string(err.position(), ' ') + "^ " + err.what();
}

} // namespace qseries::dsl
