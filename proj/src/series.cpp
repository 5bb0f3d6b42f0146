#include "qseries/series.hpp"

#include <algorithm>
#include <string>

#include "qseries/kernels.hpp"

namespace qseries {

Series::Series(Exponent base, std::vector<Coeff> coeffs) : base_(base), coeffs_(std::move(coeffs)) {}

Series Series::zero(Exponent order) { return Series(order, {}); }

Series Series::one(Exponent order) { return make_monomial(1, 0, order); }

Coeff Series::coeff(Exponent e) const
{
    if (e >= order()) {
        throw RangeError("coefficient of q^" + std::to_string(e) + " requested from a series known below q^" +
                         std::to_string(order()));
    }
    if (e < base_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(e - base_)];
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return sgn(c) == 0; });
}

std::optional<Exponent> Series::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return base_ + static_cast<Exponent>(i);
        }
    }
    return std::nullopt;
}

Series Series::trimmed() const
{
    const auto v = valuation();
    if (!v) {
        return zero(order());
    }
    const auto skip = static_cast<std::ptrdiff_t>(*v - base_);
    return Series(*v, std::vector<Coeff>(coeffs_.begin() + skip, coeffs_.end()));
}

Series Series::truncated(Exponent new_order) const
{
    if (new_order >= order()) {
        return *this;
    }
    if (new_order <= base_) {
        return zero(new_order);
    }
    return Series(base_, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + (new_order - base_)));
}

Series Series::operator-() const
{
    Series out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

namespace {

template <typename Op>
Series combine(const Series& s, const Series& t, Op op)
{
    const Exponent base = std::min(s.base(), t.base());
    const Exponent order = std::min(s.order(), t.order());
    if (order <= base) {
        return Series::zero(order);
    }
    std::vector<Coeff> out(static_cast<std::size_t>(order - base));
    for (Exponent e = base; e < order; ++e) {
        auto& slot = out[static_cast<std::size_t>(e - base)];
        if (e >= s.base()) {
            slot = s.coeffs()[static_cast<std::size_t>(e - s.base())];
        }
        if (e >= t.base()) {
            op(slot, t.coeffs()[static_cast<std::size_t>(e - t.base())]);
        }
    }
    return Series(base, std::move(out));
}

} // namespace

Series& Series::operator+=(const Series& rhs)
{
    *this = combine(*this, rhs, [](Coeff& a, const Coeff& b) { a += b; });
    return *this;
}

Series& Series::operator-=(const Series& rhs)
{
    *this = combine(*this, rhs, [](Coeff& a, const Coeff& b) { a -= b; });
    return *this;
}

Series& Series::operator*=(const Series& rhs)
{
    *this = *this * rhs;
    return *this;
}

Series operator*(const Series& lhs, const Series& rhs)
{
    // Leading zeros only shrink the provable window, so drop them first.
    const Series s = lhs.trimmed();
    const Series t = rhs.trimmed();
    const Exponent base = s.base() + t.base();
    const Exponent order = std::min(s.order() + t.base(), t.order() + s.base());
    std::vector<Coeff> out(static_cast<std::size_t>(order - base));
    kernels::convolve(s.coeffs(), t.coeffs(), out);
    return Series(base, std::move(out));
}

bool operator==(const Series& a, const Series& b)
{
    return equal_up_to(a, b, std::min(a.order(), b.order())).equal;
}

Series make_monomial(const Coeff& c, Exponent e, Exponent order)
{
    if (e >= order) {
        throw InvalidOrder("monomial q^" + std::to_string(e) + " lies at or above the truncation order " +
                           std::to_string(order));
    }
    std::vector<Coeff> coeffs(static_cast<std::size_t>(order - e));
    coeffs[0] = c;
    return Series(e, std::move(coeffs));
}

Series add(const Series& s, const Series& t) { return s + t; }

Series sub(const Series& s, const Series& t) { return s - t; }

Series mul(const Series& s, const Series& t) { return s * t; }

Series scale(const Series& s, const Coeff& c)
{
    std::vector<Coeff> out(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : out) {
        x *= c;
    }
    return Series(s.base(), std::move(out));
}

Series shift(const Series& s, Exponent k)
{
    return Series(s.base() + k, std::vector<Coeff>(s.coeffs().begin(), s.coeffs().end()));
}

Series pow(const Series& s, unsigned n)
{
    const Series t = s.trimmed();
    if (n == 0) {
        return Series::one(std::max<Exponent>(t.order() - t.base(), 1));
    }
    std::optional<Series> result;
    Series square = t;
    while (n != 0) {
        if (n & 1U) {
            result = result ? *result * square : square;
        }
        n >>= 1U;
        if (n != 0) {
            square = square * square;
        }
    }
    return *result;
}

Series inverse(const Series& s)
{
    const Series t = s.trimmed();
    if (t.size() == 0) {
        throw NotInvertible("cannot invert a series with no known nonzero coefficient");
    }
    const Coeff& lead = t.coeffs()[0];
    if (lead != 1 && lead != -1) {
        throw NotInvertible("lowest coefficient " + lead.get_str() + " is not a unit");
    }
    std::vector<Coeff> out(t.size());
    kernels::reciprocal(t.coeffs(), out);
    return Series(-t.base(), std::move(out));
}

Series dissect(const Series& s, Exponent m, Exponent r)
{
    if (m < 1) {
        throw InvalidResidue("dissection modulus must be positive, got " + std::to_string(m));
    }
    if (r < 0 || r >= m) {
        throw InvalidResidue("residue " + std::to_string(r) + " outside [0, " + std::to_string(m) + ")");
    }
    const Exponent base = ceil_div(s.base() - r, m);
    const Exponent order = ceil_div(s.order() - r, m);
    if (order <= base) {
        return Series::zero(order);
    }
    std::vector<Coeff> out(static_cast<std::size_t>(order - base));
    for (Exponent n = base; n < order; ++n) {
        out[static_cast<std::size_t>(n - base)] = s.coeffs()[static_cast<std::size_t>(m * n + r - s.base())];
    }
    return Series(base, std::move(out));
}

Series interleave(std::span<const Series> parts, Exponent m)
{
    if (m < 1 || parts.size() != static_cast<std::size_t>(m)) {
        throw ArityError("interleave expects exactly " + std::to_string(m) + " parts, got " +
                         std::to_string(parts.size()));
    }
    Exponent base = m * parts[0].base();
    Exponent order = m * parts[0].order();
    for (Exponent r = 0; r < m; ++r) {
        base = std::min(base, m * parts[static_cast<std::size_t>(r)].base() + r);
        order = std::min(order, m * parts[static_cast<std::size_t>(r)].order() + r);
    }
    if (order <= base) {
        return Series::zero(order);
    }
    std::vector<Coeff> out(static_cast<std::size_t>(order - base));
    for (Exponent e = base; e < order; ++e) {
        const Exponent r = e - m * floor_div(e, m);
        out[static_cast<std::size_t>(e - base)] = parts[static_cast<std::size_t>(r)].coeff(floor_div(e, m));
    }
    return Series(base, std::move(out));
}

Coeff coeff(const Series& s, Exponent e) { return s.coeff(e); }

bool is_zero(const Series& s) { return s.is_zero(); }

Comparison equal_up_to(const Series& s, const Series& t, Exponent limit)
{
    Comparison result;
    result.checked_below = std::min({limit, s.order(), t.order()});
    const Exponent lo = std::min(s.base(), t.base());
    for (Exponent e = lo; e < result.checked_below; ++e) {
        if (s.coeff(e) != t.coeff(e)) {
            result.equal = false;
            result.first_mismatch = e;
            break;
        }
    }
    return result;
}

} // namespace qseries
