#include "qseries/rr.hpp"

namespace qseries::rr {

namespace {

ProductExpr quotient(Exponent modulus, Exponent n1, Exponent n2, Exponent d1, Exponent d2)
{
    return {{{1, n1, modulus, 1}, {1, n2, modulus, 1}, {1, d1, modulus, -1}, {1, d2, modulus, -1}}};
}

// f_1 f_10 / (f_2 f_5)
Series eta_ratio_ab(Exponent order)
{
    return expand(eta_expr(1) * eta_expr(10) * eta_expr(2, -1) * eta_expr(5, -1), order);
}

Series monomial_shift(const Series& s, Exponent k) { return shift(s, k).truncated(s.order()); }

} // namespace

RRContext RRContext::build(Exponent order) { return {order, rq(order), rq_squared_argument(order)}; }

Series rq(Exponent order) { return expand(quotient(5, 1, 4, 2, 3), order); }

Series rq_squared_argument(Exponent order) { return expand(quotient(10, 2, 8, 4, 6), order); }

Sides bb_sides_1(Exponent order)
{
    const auto ctx = RRContext::build(order);
    const Series x = ctx.r1 * ctx.r2 * ctx.r2;
    Sides s;
    s.lhs = inverse(x) - monomial_shift(x, 2);
    s.rhs = expand(eta_expr(2) * eta_expr(5, 5) * eta_expr(1, -1) * eta_expr(10, -5), order);
    return s;
}

Sides bb_sides_2(Exponent order)
{
    const auto ctx = RRContext::build(order);
    const Series r1sq = ctx.r1 * ctx.r1;
    Sides s;
    s.lhs = ctx.r2 * inverse(r1sq) - r1sq * inverse(ctx.r2);
    s.rhs = monomial_shift(
        scale(expand(eta_expr(10, 5) * eta_expr(1) * eta_expr(5, -5) * eta_expr(2, -1), order), 4), 1);
    return s;
}

Series bb_residual_1(Exponent order)
{
    const auto s = bb_sides_1(order);
    return s.lhs - s.rhs;
}

Series bb_residual_2(Exponent order)
{
    const auto s = bb_sides_2(order);
    return s.lhs - s.rhs;
}

ProductExpr a_series() { return {{{-1, 1, 5, 1}, {-1, 4, 5, 1}, {1, 1, 10, 3}, {1, 9, 10, 3}}}; }
ProductExpr b_series() { return {{{-1, 2, 5, 1}, {-1, 3, 5, 1}, {1, 3, 10, 3}, {1, 7, 10, 3}}}; }
ProductExpr c_series() { return {{{-1, 1, 5, 3}, {-1, 4, 5, 3}, {1, 3, 10, 1}, {1, 7, 10, 1}}}; }
ProductExpr d_series() { return {{{-1, 2, 5, 3}, {-1, 3, 5, 3}, {1, 1, 10, 1}, {1, 9, 10, 1}}}; }

Series ab_chain_residual(Exponent order)
{
    const Series lhs = expand(b_series(), order) - monomial_shift(expand(a_series(), order), 2);
    return lhs - expand(eta_expr(5, 4) * eta_expr(10, -4), order);
}

Series cd_chain_residual(Exponent order)
{
    const Series lhs = expand(c_series(), order) - expand(d_series(), order);
    return lhs - monomial_shift(scale(expand(eta_expr(10, 4) * eta_expr(5, -4), order), 4), 1);
}

Series a_factorization_residual(Exponent order)
{
    const auto ctx = RRContext::build(order);
    return expand(a_series(), order) - eta_ratio_ab(order) * ctx.r1 * ctx.r2 * ctx.r2;
}

Series b_factorization_residual(Exponent order)
{
    const auto ctx = RRContext::build(order);
    return expand(b_series(), order) - eta_ratio_ab(order) * inverse(ctx.r1 * ctx.r2 * ctx.r2);
}

Series c_factorization_residual(Exponent order)
{
    const auto ctx = RRContext::build(order);
    const Series ratio = inverse(eta_ratio_ab(order));
    return expand(c_series(), order) - ratio * ctx.r2 * inverse(ctx.r1 * ctx.r1);
}

Series d_factorization_residual(Exponent order)
{
    const auto ctx = RRContext::build(order);
    const Series ratio = inverse(eta_ratio_ab(order));
    return expand(d_series(), order) - ratio * ctx.r1 * ctx.r1 * inverse(ctx.r2);
}

} // namespace qseries::rr
