#pragma once

// Dense truncated Laurent series over the integers.
//
// A Series stores the coefficients of q^base, q^(base+1), ..., q^(order-1).
// Every exponent below base has coefficient zero; every exponent at or
// above order is unknown. Values are immutable once built and every
// operation returns the largest window it can prove exact.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"

namespace qseries {

using Exponent = std::int64_t;
using Coeff = mpz_class;

class Series {
public:
    // The empty series with order 0 (zero, nothing known above q^-1).
    Series() = default;

    // Coefficients of q^base ... q^(base + coeffs.size() - 1).
    Series(Exponent base, std::vector<Coeff> coeffs);

    static Series zero(Exponent order);
    static Series one(Exponent order);

    Exponent base() const noexcept { return base_; }
    Exponent order() const noexcept { return base_ + static_cast<Exponent>(coeffs_.size()); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    // Coefficient of q^e; zero below base, RangeError at or above order.
    Coeff coeff(Exponent e) const;

    bool is_zero() const;

    // Same series with leading zero coefficients dropped. The zero series
    // trims to base == order.
    Series trimmed() const;

    // Forget everything at or above new_order (no-op if already lower).
    Series truncated(Exponent new_order) const;

    // Exponent of the lowest nonzero coefficient, if any.
    std::optional<Exponent> valuation() const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);

    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(const Series& lhs, const Series& rhs);

    // Agreement on every exponent below min(order(a), order(b)).
    friend bool operator==(const Series& a, const Series& b);

private:
    Exponent base_ = 0;
    std::vector<Coeff> coeffs_;
};

Series make_monomial(const Coeff& c, Exponent e, Exponent order);

Series add(const Series& s, const Series& t);
Series sub(const Series& s, const Series& t);
Series mul(const Series& s, const Series& t);
Series scale(const Series& s, const Coeff& c);
Series shift(const Series& s, Exponent k);
Series pow(const Series& s, unsigned n);

// Multiplicative inverse; the lowest nonzero coefficient must be +1 or -1.
Series inverse(const Series& s);

// Coefficients at exponents m*n + r, re-indexed by n.
Series dissect(const Series& s, Exponent m, Exponent r);

// Inverse of dissect: parts[r] supplies exponents m*n + r.
Series interleave(std::span<const Series> parts, Exponent m);

Coeff coeff(const Series& s, Exponent e);
bool is_zero(const Series& s);

struct Comparison {
    bool equal = true;
    // Exponents strictly below this bound were compared.
    Exponent checked_below = 0;
    std::optional<Exponent> first_mismatch;

    explicit operator bool() const noexcept { return equal; }
};

// Compares s and t on every exponent below min(limit, order(s), order(t)).
Comparison equal_up_to(const Series& s, const Series& t, Exponent limit);

// Floor and ceiling division for a positive divisor.
constexpr Exponent floor_div(Exponent a, Exponent b) noexcept
{
    Exponent q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr Exponent ceil_div(Exponent a, Exponent b) noexcept
{
    Exponent q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

} // namespace qseries
