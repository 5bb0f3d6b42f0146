#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries/qproducts.hpp"

namespace qseries {

enum class ClaimKind { vanishes, equals_progression, equals_series, positive_difference };

// Coefficients of expr at exponents modulus*n + residue, n >= 0.
struct Progression {
    ProductExpr expr;
    Exponent modulus = 1;
    // Several residues only for `vanishes`; the other kinds use exactly one.
    std::vector<Exponent> residues;

    friend bool operator==(const Progression&, const Progression&) = default;
};

// scale * q^shift * expand(expr).
struct ClosedForm {
    ProductExpr expr;
    long scale = 1;
    Exponent shift = 0;

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

// The left progression L(n) is compared against R(n + index_shift), where R
// is the right progression. Indices where R would be read at a negative
// exponent are outside the claim.
//
//   vanishes             L(n) = 0 for every residue of `left`
//   equals_progression   L(n) = R(n + index_shift)
//   equals_series        sum_n (L(n) - R(n + index_shift)) q^n = closed_form
//   positive_difference  L(n) - R(n + index_shift) > 0
struct Claim {
    ClaimKind kind = ClaimKind::vanishes;
    Progression left;
    std::optional<Progression> right;
    Exponent index_shift = 0;
    std::optional<ClosedForm> closed_form;

    friend bool operator==(const Claim&, const Claim&) = default;
};

enum class Status { pass, fail, vacuous };

struct Failure {
    Exponent index = 0;
    std::string left_value;
    std::string right_value;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    std::string case_id;
    Claim claim;
    Exponent order = 0;
    std::int64_t checked_count = 0;
    Status status = Status::vacuous;
    std::optional<Failure> first_failure;
    // Free-form context, e.g. which sub-identity of a composite check failed.
    std::string detail;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

const char* to_string(ClaimKind kind) noexcept;
const char* to_string(Status status) noexcept;
ClaimKind claim_kind_from_string(const std::string& s);
Status status_from_string(const std::string& s);

// One-line human summary, e.g. "vanishes (-q,-q^4;q^5)(q,q^9;q^10)^3 @ 5n+{2,4}".
std::string describe(const Claim& claim);

} // namespace qseries
