#pragma once

// Text syntax for infinite products.
//
//   expr     := '1' | term (('*'? term) | ('/' term))*
//   term     := group ('^' sint)?
//   group    := '(' arglist ';' modulus ')'
//   arglist  := monomial (',' monomial)*
//   monomial := ('-'|'+')? 'q' ('^' uint)?
//   modulus  := 'q' ('^' uint)?
//   sint     := ('-')? uint
//
// Each monomial a in a group becomes one factor (a; q^M)_inf with the sign
// of a as written. '/' negates the multiplicities of the next term. Spaces
// are ignored. The lone literal "1" is the empty product.

#include <string>
#include <string_view>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"

namespace qseries::dsl {

enum class TokenKind { lparen, rparen, comma, semicolon, caret, slash, star, integer, q, minus, plus };

struct ExprToken {
    TokenKind kind;
    std::string lexeme;
    std::size_t position = 0;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, std::string found);

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

std::vector<ExprToken> tokenize(std::string_view src);

ProductExpr parse(std::string_view src);

// Canonical text; parse(format(e)) normalizes to normalize(e).
std::string format(const ProductExpr& expr);

// Source line plus a caret under the error position.
std::string caret_diagnostic(std::string_view src, const ParseError& err);

} // namespace qseries::dsl
