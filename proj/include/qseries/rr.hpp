#pragma once

// The Rogers-Ramanujan quotient R(q) = (q, q^4; q^5)_inf / (q^2, q^3; q^5)_inf
// and the two quotient identities relating R(q) and R(q^2) to eta quotients.

#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries::rr {

struct RRContext {
    Exponent order = 0;
    Series r1; // R(q)
    Series r2; // R(q^2)

    static RRContext build(Exponent order);
};

// R(q) below q^order.
Series rq(Exponent order);

// R(q^2), expanded from the modulus-10 products directly.
Series rq_squared_argument(Exponent order);

// 1/(R(q) R(q^2)^2) - q^2 R(q) R(q^2)^2 - f_2 f_5^5 / (f_1 f_10^5).
Series bb_residual_1(Exponent order);

// R(q^2)/R(q)^2 - R(q)^2/R(q^2) - 4q f_10^5 f_1 / (f_5^5 f_2).
// With f_5 to the first power the two sides part at q^6.
Series bb_residual_2(Exponent order);

// The two sides of each quotient identity, for inspection.
struct Sides {
    Series lhs;
    Series rhs;
};
Sides bb_sides_1(Exponent order);
Sides bb_sides_2(Exponent order);

// The a, b, c, d products of the 5-dissection equalities.
ProductExpr a_series();
ProductExpr b_series();
ProductExpr c_series();
ProductExpr d_series();

// b(q) - q^2 a(q) - f_5^4 / f_10^4.
Series ab_chain_residual(Exponent order);

// c(q) - d(q) - 4q f_10^4 / f_5^4.
Series cd_chain_residual(Exponent order);

// a(q) - f_1 f_10 / (f_2 f_5) * R(q) R(q^2)^2.
Series a_factorization_residual(Exponent order);

// b(q) - f_1 f_10 / (f_2 f_5) / (R(q) R(q^2)^2).
Series b_factorization_residual(Exponent order);

// c(q) - f_5 f_2 / (f_1 f_10) * R(q^2) / R(q)^2.
Series c_factorization_residual(Exponent order);

// d(q) - f_5 f_2 / (f_1 f_10) * R(q)^2 / R(q^2).
Series d_factorization_residual(Exponent order);

} // namespace qseries::rr
