#include "qseries/qproducts.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qseries/kernels.hpp"

namespace qseries {

ProductExpr normalize(const ProductExpr& expr)
{
    std::map<std::tuple<int, Exponent, Exponent>, int> merged;
    for (const auto& f : expr.factors) {
        merged[{f.sign, f.offset, f.modulus}] += f.multiplicity;
    }
    ProductExpr out;
    for (const auto& [key, mult] : merged) {
        if (mult != 0) {
            out.factors.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        return std::tuple(a.multiplicity < 0, a.modulus, -std::abs(a.multiplicity), a.offset, -a.sign) <
               std::tuple(b.multiplicity < 0, b.modulus, -std::abs(b.multiplicity), b.offset, -b.sign);
    });
    return out;
}

ProductExpr operator*(const ProductExpr& lhs, const ProductExpr& rhs)
{
    ProductExpr out = lhs;
    out.factors.insert(out.factors.end(), rhs.factors.begin(), rhs.factors.end());
    return out;
}

ProductExpr reciprocal(const ProductExpr& expr)
{
    ProductExpr out = expr;
    for (auto& f : out.factors) {
        f.multiplicity = -f.multiplicity;
    }
    return out;
}

Series pochhammer(int sign, Exponent offset, Exponent modulus, Exponent order)
{
    if (modulus < 1) {
        throw std::invalid_argument("pochhammer modulus must be positive, got " + std::to_string(modulus));
    }
    if (offset < 0) {
        throw std::invalid_argument("pochhammer offset must be nonnegative, got " + std::to_string(offset));
    }
    if (order < 1) {
        throw InvalidOrder("pochhammer needs a positive truncation order");
    }
    std::vector<Coeff> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (Exponent e = offset; e < order; e += modulus) {
        if (e == 0) {
            // 1 - sign: either the zero series or a factor of 2.
            if (sign > 0) {
                return Series(0, std::vector<Coeff>(static_cast<std::size_t>(order)));
            }
            for (auto& x : c) {
                x *= 2;
            }
            continue;
        }
        kernels::mul_linear_factor(c, sign, e);
    }
    return Series(0, std::move(c));
}

namespace {

Series product_of(const std::vector<Factor>& factors, Exponent order)
{
    std::vector<Series> powers(factors.size());
    const auto n = static_cast<std::int64_t>(factors.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const Factor& f = factors[static_cast<std::size_t>(i)];
        powers[static_cast<std::size_t>(i)] =
            pow(pochhammer(f.sign, f.offset, f.modulus, order), static_cast<unsigned>(std::abs(f.multiplicity)));
    }
    Series acc = Series::one(order);
    for (const auto& p : powers) {
        acc = (acc * p).truncated(order);
    }
    return acc;
}

} // namespace

Series expand(const ProductExpr& expr, Exponent order)
{
    if (order < 1) {
        throw InvalidOrder("expand needs a positive truncation order");
    }
    for (const auto& f : expr.factors) {
        if (f.modulus < 1 || f.offset < 0) {
            throw std::invalid_argument("factor needs modulus >= 1 and offset >= 0");
        }
    }
    const ProductExpr norm = normalize(expr);
    std::vector<Factor> num;
    std::vector<Factor> den;
    for (const auto& f : norm.factors) {
        (f.multiplicity > 0 ? num : den).push_back(f);
    }
    Series result = product_of(num, order);
    if (!den.empty()) {
        const Series d = product_of(den, order);
        if (d.size() == 0 || (d.coeffs()[0] != 1 && d.coeffs()[0] != -1)) {
            throw NotInvertible("denominator of the product has constant term " +
                                (d.size() == 0 ? std::string("0") : d.coeffs()[0].get_str()));
        }
        result = (result * inverse(d)).truncated(order);
    }
    return result;
}

Series eta_like(Exponent k, Exponent order)
{
    if (k < 1) {
        throw std::invalid_argument("eta_like needs k >= 1");
    }
    return pochhammer(1, k, k, order);
}

ProductExpr eta_expr(Exponent k, int multiplicity) { return ProductExpr{{Factor{1, k, k, multiplicity}}}; }

} // namespace qseries
