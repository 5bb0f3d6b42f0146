#pragma once

// Ramanujan's theta function f(a, b) = sum_k a^(k(k+1)/2) b^(k(k-1)/2) for
// monomial arguments, its triple-product form, the four classical
// f(a, b) identities, and the bivariate quadratic-exponent sums that drive
// the 5-dissection cancellation arguments.

#include <array>
#include <string>

#include "qseries/kernels.hpp"
#include "qseries/report.hpp"
#include "qseries/series.hpp"

namespace qseries::theta {

// sign * q^exponent.
struct SignedMonomial {
    int sign = 1;
    Exponent exponent = 0;

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

SignedMonomial operator*(SignedMonomial x, SignedMonomial y);
SignedMonomial operator/(SignedMonomial x, SignedMonomial y);
SignedMonomial operator-(SignedMonomial x);
SignedMonomial power(SignedMonomial x, unsigned n);
std::string to_string(SignedMonomial x);

struct ThetaParams {
    SignedMonomial a;
    SignedMonomial b;
};

// sum over all integers k with exponent below `order`. Throws
// DivergentParameters unless exponent(a) + exponent(b) >= 1.
Series theta_series(const ThetaParams& p, Exponent order);

// (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf expanded through qproducts.
Series triple_product(const ThetaParams& p, Exponent order);

// Smallest exponent occurring in theta_series(p, .).
Exponent theta_min_exponent(const ThetaParams& p);

// prod_{k >= 0} (1 - z w^k) for monomials z, w with exponent(w) >= 1.
// Factors with negative exponent are pulled out as a monomial prefactor.
Series monomial_pochhammer(SignedMonomial z, SignedMonomial w, Exponent order);

// LHS - RHS of one of the four f(a, b) identities:
//   1: 2 f(a, ab^2) f(b, a^2 b) - f(1, ab) f(a, b)
//   2: f(a, b) f(-a, -b) - f(-ab, -ab) f(-a^2, -b^2)
//   3: f(a, b) - f(a^3 b, a b^3) - a f(b/a, a^5 b^3)
//   4: f(a, b)^2 - f(a^2, b^2) f(ab, ab) - a f(b/a, a^3 b) f(1, a^2 b^2)
// The result is known below q^order and must vanish identically.
Series theta_identity_residual(int which, SignedMonomial a, SignedMonomial b, Exponent order);

using QuadFormSum = kernels::QuadForm;

// sum_{m,n} eps^(m+n) q^(shift + A m^2 + B m + C n^2 + D n) below q^order.
Series quad_form_series(const QuadFormSum& s, Exponent order);

// Keeps the exponents congruent to r mod m and zeroes the rest, without
// re-indexing.
Series residue_component(const Series& s, Exponent m, Exponent r);

enum class CancellationCase { e, f };
enum class SignVariant { upper, lower };

// The eight sums of one case, in order, with the closed form the residue
// component of each is claimed to equal.
struct ComponentPair {
    QuadFormSum sum;
    QuadFormSum component;
};
std::array<ComponentPair, 8> cancellation_sums(CancellationCase c);

struct CancellationResult {
    // component of sum i equals its closed form
    std::array<bool, 8> component_identity{};
    // pairs (1,4), (2,3), (5,8), (6,7) have equal components
    std::array<bool, 4> pair_cancellation{};
    // the three-factor split of the product equals the product itself
    bool decomposition = false;
    // prefactor times the theta combination reproduces the product
    bool assembly = false;
    VerificationReport report;
};

// Rebuilds the e (residue 3) or f (residue 4) case from its eight sums,
// checks every component identity and pairwise cancellation, and checks that
// the product vanishes on the claimed progression. Requires order >= 50.
CancellationResult theta_cancellation(CancellationCase c, SignVariant v, Exponent order);

// Product expression of the e or f series for the given sign variant.
ProductExpr cancellation_product(CancellationCase c, SignVariant v);

} // namespace qseries::theta
