#pragma once

// Infinite q-products and their expansion into truncated series.
//
// A Factor is (a; q^M)_inf raised to an integer power, with a = sign * q^offset,
// i.e. prod_{k >= 0} (1 - sign * q^(offset + k M)). The sign is the sign of a
// as written, so "(-q; q^5)" is Factor{-1, 1, 5, 1} and expands to
// (1 + q)(1 + q^6)(1 + q^11)...

#include <vector>

#include "qseries/series.hpp"

namespace qseries {

struct Factor {
    int sign = 1;
    Exponent offset = 1;
    Exponent modulus = 1;
    int multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct ProductExpr {
    std::vector<Factor> factors;

    friend bool operator==(const ProductExpr&, const ProductExpr&) = default;
};

// Merges factors with equal (sign, offset, modulus), drops zero powers and
// sorts into canonical order: numerator factors first, then by modulus,
// multiplicity (descending), offset and sign.
ProductExpr normalize(const ProductExpr& expr);

// Concatenation of factor lists (the product of two expressions).
ProductExpr operator*(const ProductExpr& lhs, const ProductExpr& rhs);

// The expression with every multiplicity negated.
ProductExpr reciprocal(const ProductExpr& expr);

// prod_{k >= 0} (1 - sign q^(offset + k modulus)) known below q^order.
Series pochhammer(int sign, Exponent offset, Exponent modulus, Exponent order);

// Expands an expression below q^order. Denominator factors are expanded as
// one product and inverted once; this throws NotInvertible when that product
// has a non-unit constant term, which happens for (-1; q^M) factors.
Series expand(const ProductExpr& expr, Exponent order);

// f_k = (q^k; q^k)_inf.
Series eta_like(Exponent k, Exponent order);

// Factor-list shorthand: (q^k; q^k)_inf to the given power.
ProductExpr eta_expr(Exponent k, int multiplicity = 1);

} // namespace qseries
