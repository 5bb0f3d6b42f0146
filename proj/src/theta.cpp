#include "qseries/theta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qseries/qproducts.hpp"

namespace qseries::theta {

SignedMonomial operator*(SignedMonomial x, SignedMonomial y) { return {x.sign * y.sign, x.exponent + y.exponent}; }

// Signs are +-1, so division and multiplication agree on them.
SignedMonomial operator/(SignedMonomial x, SignedMonomial y) { return {x.sign * y.sign, x.exponent - y.exponent}; }

SignedMonomial operator-(SignedMonomial x) { return {-x.sign, x.exponent}; }

SignedMonomial power(SignedMonomial x, unsigned n)
{
    return {(n % 2 == 1) ? x.sign : 1, x.exponent * static_cast<Exponent>(n)};
}

std::string to_string(SignedMonomial x)
{
    std::string out = x.sign < 0 ? "-" : "";
    if (x.exponent == 0) {
        return out + "1";
    }
    out += "q";
    if (x.exponent != 1) {
        out += "^" + std::to_string(x.exponent);
    }
    return out;
}

namespace {

void require_convergent(const ThetaParams& p)
{
    if (p.a.exponent + p.b.exponent < 1) {
        throw DivergentParameters("f(" + to_string(p.a) + ", " + to_string(p.b) +
                                  ") needs a positive exponent sum, got " +
                                  std::to_string(p.a.exponent + p.b.exponent));
    }
}

// k(k+1)/2 is odd exactly when k = 1, 2 (mod 4).
bool triangular_odd(Exponent k)
{
    const Exponent r = ((k % 4) + 4) % 4;
    return r == 1 || r == 2;
}

// A product prod (1 - z w^k) split into sign * q^shift * (linear factors) * expr.
struct ProductPlan {
    int sign = 1;
    Exponent shift = 0;
    std::vector<std::pair<int, Exponent>> linear;
    ProductExpr expr;

    void absorb(const ProductPlan& other)
    {
        sign *= other.sign;
        shift += other.shift;
        linear.insert(linear.end(), other.linear.begin(), other.linear.end());
        expr = expr * other.expr;
    }

    Series evaluate(Exponent order) const
    {
        // shift <= 0, so the proper part needs extra room above order.
        const Exponent target = order - shift;
        if (target < 1) {
            return Series::zero(order);
        }
        Series proper = expand(expr, target);
        std::vector<Coeff> c(proper.coeffs().begin(), proper.coeffs().end());
        for (const auto& [s, e] : linear) {
            kernels::mul_linear_factor(c, s, e);
        }
        return shift_and_sign(Series(0, std::move(c)));
    }

private:
    Series shift_and_sign(const Series& s) const
    {
        return qseries::shift(sign < 0 ? -s : s, shift);
    }
};

ProductPlan plan_pochhammer(SignedMonomial z, SignedMonomial w)
{
    if (w.exponent < 1) {
        throw DivergentParameters("(" + to_string(z) + "; " + to_string(w) + ") needs a positive base exponent");
    }
    if (w.sign < 0) {
        // (z; w) = (z; w^2) (z w; w^2)
        const SignedMonomial w2 = w * w;
        ProductPlan plan = plan_pochhammer(z, w2);
        plan.absorb(plan_pochhammer(z * w, w2));
        return plan;
    }
    ProductPlan plan;
    Exponent e = z.exponent;
    for (; e < 0; e += w.exponent) {
        // 1 - c q^e = -c q^e (1 - c q^-e)
        plan.sign *= -z.sign;
        plan.shift += e;
        plan.linear.emplace_back(z.sign, -e);
    }
    plan.expr.factors.push_back(Factor{z.sign, e, w.exponent, 1});
    return plan;
}

} // namespace

Exponent theta_min_exponent(const ThetaParams& p)
{
    require_convergent(p);
    const Exponent s = p.a.exponent + p.b.exponent;
    const Exponent d = p.a.exponent - p.b.exponent;
    // s k^2 + d k is twice the exponent, hence even.
    return kernels::quadratic_min(s, d) / 2;
}

Series theta_series(const ThetaParams& p, Exponent order)
{
    const Exponent lo = theta_min_exponent(p);
    if (lo >= order) {
        return Series::zero(order);
    }
    const Exponent s = p.a.exponent + p.b.exponent;
    const Exponent d = p.a.exponent - p.b.exponent;
    std::vector<Coeff> c(static_cast<std::size_t>(order - lo));
    const kernels::IntRange ks = kernels::quadratic_below(s, d, 2 * order);
    for (Exponent k = ks.lo; k <= ks.hi; ++k) {
        const Exponent e = (s * k * k + d * k) / 2;
        if (e >= order) {
            continue;
        }
        const bool negative = (p.a.sign < 0 && triangular_odd(k)) != (p.b.sign < 0 && triangular_odd(k - 1));
        auto& slot = c[static_cast<std::size_t>(e - lo)];
        if (negative) {
            slot -= 1;
        } else {
            slot += 1;
        }
    }
    return Series(lo, std::move(c));
}

Series monomial_pochhammer(SignedMonomial z, SignedMonomial w, Exponent order)
{
    return plan_pochhammer(z, w).evaluate(order);
}

Series triple_product(const ThetaParams& p, Exponent order)
{
    require_convergent(p);
    const SignedMonomial ab = p.a * p.b;
    ProductPlan plan = plan_pochhammer(-p.a, ab);
    plan.absorb(plan_pochhammer(-p.b, ab));
    plan.absorb(plan_pochhammer(ab, ab));
    return plan.evaluate(order);
}

Series theta_identity_residual(int which, SignedMonomial a, SignedMonomial b, Exponent order)
{
    const SignedMonomial one{1, 0};
    const SignedMonomial ab = a * b;

    std::vector<ThetaParams> instances;
    switch (which) {
    case 1:
        instances = {{a, a * b * b}, {b, a * a * b}, {one, ab}, {a, b}};
        break;
    case 2:
        instances = {{a, b}, {-a, -b}, {-ab, -ab}, {-(a * a), -(b * b)}};
        break;
    case 3:
        instances = {{a, b}, {power(a, 3) * b, a * power(b, 3)}, {b / a, power(a, 5) * power(b, 3)}};
        break;
    case 4:
        instances = {{a, b}, {a * a, b * b}, {ab, ab}, {b / a, power(a, 3) * b}, {one, power(ab, 2)}};
        break;
    default:
        throw std::invalid_argument("identity number must be 1..4, got " + std::to_string(which));
    }

    // Laurent factors shrink product windows; pad every instance so the
    // residual is known below `order`.
    Exponent pad = std::max<Exponent>(0, -a.exponent);
    for (const auto& p : instances) {
        try {
            pad += std::max<Exponent>(0, -theta_min_exponent(p));
        } catch (const DivergentParameters& e) {
            throw DivergentParameters("identity " + std::to_string(which) + ": " + e.what());
        }
    }
    const Exponent work = order + pad;
    std::vector<Series> f;
    f.reserve(instances.size());
    for (const auto& p : instances) {
        f.push_back(theta_series(p, work));
    }
    auto times_a = [&](const Series& s) { return qseries::shift(a.sign < 0 ? -s : s, a.exponent); };

    Series residual;
    switch (which) {
    case 1:
        residual = scale(f[0] * f[1], 2) - f[2] * f[3];
        break;
    case 2:
        residual = f[0] * f[1] - f[2] * f[3];
        break;
    case 3:
        residual = f[0] - f[1] - times_a(f[2]);
        break;
    default:
        residual = f[0] * f[0] - f[1] * f[2] - times_a(f[3] * f[4]);
        break;
    }
    return residual.truncated(order);
}

Series quad_form_series(const QuadFormSum& s, Exponent order)
{
    if (s.a < 1 || s.c < 1) {
        throw std::invalid_argument("quadratic form needs A >= 1 and C >= 1");
    }
    const Exponent lo = s.shift + kernels::quadratic_min(s.a, s.b) + kernels::quadratic_min(s.c, s.d);
    if (lo >= order) {
        return Series::zero(order);
    }
    const auto counts = kernels::quad_form_counts(s, lo, order);
    std::vector<Coeff> c(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        c[i] = static_cast<long>(counts[i]);
    }
    return Series(lo, std::move(c));
}

Series residue_component(const Series& s, Exponent m, Exponent r)
{
    std::vector<Coeff> c(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Exponent e = s.base() + static_cast<Exponent>(i);
        if (e - m * floor_div(e, m) != r) {
            c[i] = 0;
        }
    }
    return Series(s.base(), std::move(c));
}

std::array<ComponentPair, 8> cancellation_sums(CancellationCase c)
{
    auto sum = [](Exponent b, Exponent d, Exponent shift) { return QuadFormSum{1, 20, b, 20, d, shift}; };
    auto comp = [](Exponent b, Exponent d, Exponent shift) { return QuadFormSum{1, 100, b, 100, d, shift}; };
    if (c == CancellationCase::e) {
        return {{
            {sum(2, 1, 0), comp(125, 40, 43)},
            {sum(18, 1, 4), comp(75, 60, 23)},
            {sum(2, 9, 1), comp(75, 60, 23)},
            {sum(18, 9, 5), comp(125, 40, 43)},
            {sum(2, 11, 4), comp(25, 60, 13)},
            {sum(18, 11, 8), comp(25, 40, 8)},
            {sum(2, 21, 8), comp(25, 40, 8)},
            {sum(18, 21, 12), comp(25, 60, 13)},
        }};
    }
    return {{
        {sum(6, 7, 0), comp(20, 75, 14)},
        {sum(14, 7, 2), comp(80, 75, 29)},
        {sum(6, 17, 3), comp(80, 75, 29)},
        {sum(14, 17, 5), comp(20, 75, 14)},
        {sum(6, 3, 2), comp(80, 25, 19)},
        {sum(14, 3, 4), comp(20, 25, 4)},
        {sum(6, 13, 4), comp(20, 25, 4)},
        {sum(14, 13, 6), comp(80, 25, 19)},
    }};
}

ProductExpr cancellation_product(CancellationCase c, SignVariant v)
{
    const int u = v == SignVariant::upper ? 1 : -1;
    if (c == CancellationCase::e) {
        return {{{-u, 1, 5, 1}, {-u, 4, 5, 1}, {u, 4, 10, 3}, {u, 6, 10, 3}}};
    }
    return {{{-u, 2, 5, 1}, {-u, 3, 5, 1}, {u, 2, 10, 3}, {u, 8, 10, 3}}};
}

namespace {

// The three-factor split used to separate the product into theta pieces.
ProductExpr split_product(CancellationCase c, int u)
{
    if (c == CancellationCase::e) {
        return {{{-u, 1, 10, 1}, {u, 4, 10, 1}, {u, 6, 10, 1}, {-u, 9, 10, 1},
                 {1, 8, 20, 1}, {1, 12, 20, 1},
                 {u, 4, 10, 1}, {u, 6, 10, 1}}};
    }
    return {{{u, 2, 10, 1}, {-u, 3, 10, 1}, {-u, 7, 10, 1}, {u, 8, 10, 1},
             {1, 4, 20, 1}, {1, 16, 20, 1},
             {u, 2, 10, 1}, {u, 8, 10, 1}}};
}

} // namespace

CancellationResult theta_cancellation(CancellationCase c, SignVariant v, Exponent order)
{
    if (order < 50) {
        throw InvalidOrder("cancellation check needs order >= 50");
    }
    const int u = v == SignVariant::upper ? 1 : -1;
    const Exponent residue = c == CancellationCase::e ? 3 : 4;
    const char* label = c == CancellationCase::e ? "S" : "T";
    const auto specs = cancellation_sums(c);

    CancellationResult out;
    std::string detail;
    auto note = [&detail](const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; };

    std::array<Series, 8> sums;
    std::array<Series, 8> comps;
    for (std::size_t i = 0; i < 8; ++i) {
        sums[i] = quad_form_series(specs[i].sum, order);
        comps[i] = residue_component(sums[i], 5, residue);
        const Series closed = quad_form_series(specs[i].component, order);
        out.component_identity[i] = equal_up_to(comps[i], closed, order).equal;
        if (!out.component_identity[i]) {
            note("component of " + std::string(label) + std::to_string(i + 1) + " differs from its closed form");
        }
    }
    constexpr std::array<std::pair<std::size_t, std::size_t>, 4> pairs{{{0, 3}, {1, 2}, {4, 7}, {5, 6}}};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto [x, y] = pairs[j];
        out.pair_cancellation[j] = equal_up_to(comps[x], comps[y], order).equal;
        if (!out.pair_cancellation[j]) {
            note(std::string(label) + std::to_string(x + 1) + " and " + label + std::to_string(y + 1) +
                 " do not cancel");
        }
    }

    const ProductExpr product = cancellation_product(c, v);
    const Series direct = expand(product, order);

    out.decomposition = equal_up_to(expand(split_product(c, u), order), direct, order).equal;
    if (!out.decomposition) {
        note("three-factor split does not reproduce the product");
    }

    const Series p15 = expand({{{-1, 15, 40, 1}, {-1, 25, 40, 1}, {1, 40, 40, 1}}}, order);
    const Series p5 = expand({{{-1, 5, 40, 1}, {-1, 35, 40, 1}, {1, 40, 40, 1}}}, order);
    const Series first = sums[0] - scale(sums[1], u) + scale(sums[2], u) - sums[3];
    const Series second = sums[4] - scale(sums[5], u) + scale(sums[6], u) - sums[7];
    const Series bracket = p15 * first - scale(p5 * second, u);
    const Series prefactor = expand(eta_expr(5) * eta_expr(10, -4), order);
    const Series assembled = (prefactor * bracket).truncated(order);
    out.assembly = equal_up_to(assembled, direct, order).equal && assembled.order() >= order;
    if (!out.assembly) {
        note("theta assembly does not reproduce the product");
    }

    auto& rep = out.report;
    rep.case_id = std::string("theta-cancellation/") + (c == CancellationCase::e ? "e" : "f") + "-" +
                  (v == SignVariant::upper ? "upper" : "lower");
    rep.claim.kind = ClaimKind::vanishes;
    rep.claim.left = Progression{product, 5, {residue}};
    rep.order = order;
    const Series progression = dissect(direct, 5, residue);
    for (Exponent n = std::max<Exponent>(progression.base(), 0); n < progression.order(); ++n) {
        ++rep.checked_count;
        const Coeff value = progression.coeff(n);
        if (sgn(value) != 0 && !rep.first_failure) {
            rep.first_failure = Failure{5 * n + residue, value.get_str(), "0"};
        }
    }
    if (rep.first_failure) {
        note("progression " + std::to_string(5) + "n+" + std::to_string(residue) + " does not vanish");
    }
    const bool all_sub = std::all_of(out.component_identity.begin(), out.component_identity.end(),
                                     [](bool b) { return b; }) &&
                         std::all_of(out.pair_cancellation.begin(), out.pair_cancellation.end(),
                                     [](bool b) { return b; }) &&
                         out.decomposition && out.assembly;
    if (rep.checked_count == 0) {
        rep.status = Status::vacuous;
    } else if (rep.first_failure || !all_sub) {
        rep.status = Status::fail;
        if (!rep.first_failure) {
            // A failed sub-identity still needs a witness for the report.
            rep.first_failure = Failure{-1, "sub-identity", "mismatch"};
        }
    } else {
        rep.status = Status::pass;
    }
    rep.detail = detail;
    return out;
}

} // namespace qseries::theta
