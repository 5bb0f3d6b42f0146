#include "qseries/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qseries/dsl.hpp"
#include "qseries/theta.hpp"

namespace qseries::verify {

namespace {

Exponent mod(Exponent a, Exponent m) { return a - m * floor_div(a, m); }

Coeff at_or_zero(const Series& s, Exponent e) { return e < 0 ? Coeff(0) : s.coeff(e); }

void require_single_residue(const Progression& p, const char* side)
{
    if (p.residues.size() != 1) {
        throw std::invalid_argument(std::string(side) + " progression needs exactly one residue");
    }
}

void validate(const Claim& claim)
{
    auto check_progression = [](const Progression& p) {
        if (p.modulus < 1 || p.residues.empty()) {
            throw std::invalid_argument("progression needs a positive modulus and a residue");
        }
        for (auto r : p.residues) {
            if (r < 0 || r >= p.modulus) {
                throw InvalidResidue("residue " + std::to_string(r) + " outside [0, " + std::to_string(p.modulus) +
                                     ")");
            }
        }
    };
    check_progression(claim.left);
    if (claim.right) {
        check_progression(*claim.right);
    }
    if (claim.kind != ClaimKind::vanishes) {
        require_single_residue(claim.left, "left");
        if (claim.right) {
            require_single_residue(*claim.right, "right");
        }
    }
    if (claim.kind == ClaimKind::equals_progression || claim.kind == ClaimKind::positive_difference) {
        if (!claim.right) {
            throw std::invalid_argument(std::string(to_string(claim.kind)) + " needs a right progression");
        }
    }
    if (claim.kind == ClaimKind::equals_series && !claim.closed_form) {
        throw std::invalid_argument("equals_series needs a closed form");
    }
}

void finish(VerificationReport& rep)
{
    if (rep.checked_count == 0) {
        rep.status = Status::vacuous;
    } else {
        rep.status = rep.first_failure ? Status::fail : Status::pass;
    }
}

// Pairs (n, left, right) over the comparable window of a two-sided claim.
struct Difference {
    std::vector<Exponent> left_exponents;
    std::vector<Coeff> left_values;
    std::vector<Coeff> right_values;
};

Difference compare_window(const Claim& claim, const Series& left, const std::optional<Series>& right)
{
    Difference d;
    const Exponent m = claim.left.modulus;
    const Exponent r = claim.left.residues[0];
    for (Exponent n = 0; m * n + r < left.order(); ++n) {
        Coeff rv = 0;
        if (claim.right) {
            const Exponent rm = claim.right->modulus;
            const Exponent j = n + claim.index_shift;
            const Exponent e = rm * j + claim.right->residues[0];
            if (j < 0) {
                if (claim.kind != ClaimKind::equals_series) {
                    continue;
                }
            } else {
                if (e >= right->order()) {
                    break;
                }
                rv = at_or_zero(*right, e);
            }
        }
        d.left_exponents.push_back(m * n + r);
        d.left_values.push_back(left.coeff(m * n + r));
        d.right_values.push_back(rv);
    }
    return d;
}

} // namespace

VerificationReport check(const std::string& case_id, const Claim& input, Exponent order)
{
    Claim claim = input;
    claim.left.expr = normalize(claim.left.expr);
    if (claim.right) {
        claim.right->expr = normalize(claim.right->expr);
    }
    if (claim.closed_form) {
        claim.closed_form->expr = normalize(claim.closed_form->expr);
    }
    validate(claim);

    VerificationReport rep;
    rep.case_id = case_id;
    rep.claim = claim;
    rep.order = order;
    if (order < 1) {
        finish(rep);
        return rep;
    }

    const Series left = expand(claim.left.expr, order);
    std::optional<Series> right;
    if (claim.right) {
        right = expand(claim.right->expr, order);
    }

    switch (claim.kind) {
    case ClaimKind::vanishes: {
        const Exponent m = claim.left.modulus;
        for (Exponent e = 0; e < order; ++e) {
            if (std::find(claim.left.residues.begin(), claim.left.residues.end(), mod(e, m)) ==
                claim.left.residues.end()) {
                continue;
            }
            ++rep.checked_count;
            const Coeff v = left.coeff(e);
            if (sgn(v) != 0 && !rep.first_failure) {
                rep.first_failure = Failure{e, v.get_str(), "0"};
            }
        }
        break;
    }
    case ClaimKind::equals_progression:
    case ClaimKind::positive_difference: {
        const Difference d = compare_window(claim, left, right);
        for (std::size_t i = 0; i < d.left_values.size(); ++i) {
            ++rep.checked_count;
            const bool ok = claim.kind == ClaimKind::equals_progression ? d.left_values[i] == d.right_values[i]
                                                                        : d.left_values[i] > d.right_values[i];
            if (!ok && !rep.first_failure) {
                rep.first_failure = Failure{d.left_exponents[i], d.left_values[i].get_str(),
                                            d.right_values[i].get_str()};
            }
        }
        break;
    }
    case ClaimKind::equals_series: {
        const Difference d = compare_window(claim, left, right);
        const auto len = static_cast<Exponent>(d.left_values.size());
        if (len == 0) {
            break;
        }
        const ClosedForm& cf = *claim.closed_form;
        Series closed = Series::zero(len);
        if (cf.shift < len) {
            closed = shift(scale(expand(cf.expr, len - std::max<Exponent>(cf.shift, 0)), cf.scale), cf.shift)
                         .truncated(len);
        }
        for (Exponent n = 0; n < len; ++n) {
            ++rep.checked_count;
            const Coeff diff = d.left_values[static_cast<std::size_t>(n)] - d.right_values[static_cast<std::size_t>(n)];
            const Coeff expected = closed.coeff(n);
            if (diff != expected && !rep.first_failure) {
                rep.first_failure = Failure{n, diff.get_str(), expected.get_str()};
            }
        }
        break;
    }
    }
    finish(rep);
    return rep;
}

std::vector<VerificationReport> run_cases(const std::vector<Case>& cases, Exponent order, bool parallel)
{
    std::vector<VerificationReport> out(cases.size());
    const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& c = cases[static_cast<std::size_t>(i)];
        try {
            out[static_cast<std::size_t>(i)] = c.run(order);
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.case_id = c.id;
            rep.order = order;
            rep.status = Status::fail;
            rep.first_failure = Failure{-1, "error", e.what()};
            rep.detail = std::string("error: ") + e.what();
            out[static_cast<std::size_t>(i)] = rep;
        }
    }
    return out;
}

// --- theorem families -------------------------------------------------------

namespace {

ProductExpr pair_quotient(int num_sign, Exponent n, int den_sign, Exponent d, Exponent modulus)
{
    return normalize({{{num_sign, n, modulus, 1},
                       {num_sign, modulus - n, modulus, 1},
                       {den_sign, d, modulus, -1},
                       {den_sign, modulus - d, modulus, -1}}});
}

Claim vanishing(ProductExpr expr, Exponent modulus, std::vector<Exponent> residues)
{
    Claim c;
    c.kind = ClaimKind::vanishes;
    c.left = Progression{normalize(expr), modulus, std::move(residues)};
    return c;
}

std::string tuple_text(std::initializer_list<std::pair<const char*, int>> kv)
{
    std::string out;
    for (const auto& [k, v] : kv) {
        out += (out.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

} // namespace

AndrewsBressoudParams andrews_bressoud_params(int k, int r)
{
    if (!(1 <= r && r < k)) {
        throw InvalidCase("Andrews-Bressoud needs 1 <= r < k");
    }
    if (std::gcd(r, k) != 1) {
        throw InvalidCase("Andrews-Bressoud needs gcd(r, k) = 1");
    }
    if ((k - r) % 2 == 0) {
        throw InvalidCase("Andrews-Bressoud needs r and k of opposite parity");
    }
    return {k, r, mod(static_cast<Exponent>(r) * (k - r + 1) / 2, k)};
}

VerificationReport andrews_bressoud_case(int k, int r, Exponent order)
{
    const auto p = andrews_bressoud_params(k, r);
    const ProductExpr expr = pair_quotient(1, r, 1, k - r, 2 * k);
    return check("andrews-bressoud/" + tuple_text({{"k", k}, {"r", r}}), vanishing(expr, k, {p.residue}), order);
}

AlladiGordonParams alladi_gordon_params(int m, int k, int s, bool companion)
{
    if (!(1 < m && m < k)) {
        throw InvalidCase("Alladi-Gordon needs 1 < m < k");
    }
    const int mk = m * k;
    if (!(1 <= s && s < mk) || std::gcd(s, mk) != 1) {
        throw InvalidCase("Alladi-Gordon needs 1 <= s < mk with gcd(s, mk) = 1");
    }
    if (companion && k % 2 == 0) {
        throw InvalidCase("Alladi-Gordon companion needs k odd");
    }
    AlladiGordonParams p{m, k, s, 0, 0, 0, 0};
    p.r_star = (k - 1) * s;
    p.r = static_cast<int>(mod(p.r_star, mk));
    if (p.r == 0) {
        throw InvalidCase("Alladi-Gordon: r* is divisible by mk");
    }
    p.r_prime = static_cast<int>(mod(ceil_div(p.r_star, mk), k));
    if (p.r_prime == 0) {
        throw InvalidCase("Alladi-Gordon: ceil(r*/mk) is divisible by k, r' undefined");
    }
    p.residue = mod(static_cast<Exponent>(p.r) * p.r_prime, k);
    return p;
}

namespace {

VerificationReport alladi_gordon_impl(int m, int k, int s, Exponent order, bool companion)
{
    const auto p = alladi_gordon_params(m, k, s, companion);
    const ProductExpr expr = pair_quotient(1, p.r, companion ? -1 : 1, s, m * k);
    const std::string id = std::string(companion ? "alladi-gordon-companion/" : "alladi-gordon/") +
                           tuple_text({{"m", m}, {"k", k}, {"s", s}});
    return check(id, vanishing(expr, k, {p.residue}), order);
}

VerificationReport mclaughlin_impl(int k, int m, int s, int t, Exponent order, bool companion)
{
    const auto p = mclaughlin_params(k, m, s, t, companion);
    const ProductExpr expr = pair_quotient(1, p.low, companion ? -1 : 1, p.r, m * k);
    const std::string id = std::string(companion ? "mclaughlin-companion/" : "mclaughlin/") +
                           tuple_text({{"k", k}, {"m", m}, {"s", s}, {"t", t}});
    return check(id, vanishing(expr, k, {p.residue}), order);
}

} // namespace

VerificationReport alladi_gordon_case(int m, int k, int s, Exponent order)
{
    return alladi_gordon_impl(m, k, s, order, false);
}

VerificationReport alladi_gordon_companion(int m, int k, int s, Exponent order)
{
    return alladi_gordon_impl(m, k, s, order, true);
}

McLaughlinParams mclaughlin_params(int k, int m, int s, int t, bool companion)
{
    if (k <= 1 || m <= 1) {
        throw InvalidCase("McLaughlin needs k > 1 and m > 1");
    }
    if (!(0 <= s && s < k) || !(1 <= t && t < m)) {
        throw InvalidCase("McLaughlin needs 0 <= s < k and 1 <= t < m");
    }
    if (companion && k % 2 == 0) {
        throw InvalidCase("McLaughlin companion needs k odd");
    }
    McLaughlinParams p{k, m, s, t, s * m + t, 0, 0};
    if (std::gcd(p.r, k) != 1) {
        throw InvalidCase("McLaughlin needs gcd(r, k) = 1");
    }
    p.low = p.r - t * k;
    if (p.low < 1) {
        throw InvalidCase("McLaughlin: r - tk = " + std::to_string(p.low) + " is not positive");
    }
    p.residue = mod(-static_cast<Exponent>(p.r) * s, k);
    return p;
}

VerificationReport mclaughlin_case(int k, int m, int s, int t, Exponent order)
{
    return mclaughlin_impl(k, m, s, t, order, false);
}

VerificationReport mclaughlin_companion(int k, int m, int s, int t, Exponent order)
{
    return mclaughlin_impl(k, m, s, t, order, true);
}

namespace {

std::vector<Case> andrews_bressoud_cases(int k_max, std::vector<std::string>* skipped)
{
    std::vector<Case> cases;
    for (int k = 2; k <= k_max; ++k) {
        for (int r = 1; r < k; ++r) {
            try {
                andrews_bressoud_params(k, r);
            } catch (const InvalidCase& e) {
                if (skipped) {
                    skipped->push_back(tuple_text({{"k", k}, {"r", r}}) + ": " + e.what());
                }
                continue;
            }
            cases.push_back({"andrews-bressoud/" + tuple_text({{"k", k}, {"r", r}}),
                             [k, r](Exponent n) { return andrews_bressoud_case(k, r, n); }});
        }
    }
    return cases;
}

std::vector<Case> alladi_gordon_cases(int k_max, bool companion, std::vector<std::string>* skipped)
{
    std::vector<Case> cases;
    for (int k = 3; k <= k_max; ++k) {
        for (int m = 2; m < k; ++m) {
            for (int s = 1; s < m * k; ++s) {
                const std::string tuple = tuple_text({{"m", m}, {"k", k}, {"s", s}});
                try {
                    alladi_gordon_params(m, k, s, companion);
                } catch (const InvalidCase& e) {
                    if (skipped) {
                        skipped->push_back(tuple + ": " + e.what());
                    }
                    continue;
                }
                cases.push_back({std::string(companion ? "alladi-gordon-companion/" : "alladi-gordon/") + tuple,
                                 [m, k, s, companion](Exponent n) { return alladi_gordon_impl(m, k, s, n, companion); }});
            }
        }
    }
    return cases;
}

std::vector<Case> mclaughlin_cases(int km_max, bool companion, std::vector<std::string>* skipped)
{
    std::vector<Case> cases;
    for (int k = 2; k <= km_max; ++k) {
        for (int m = 2; m <= km_max; ++m) {
            for (int s = 0; s < k; ++s) {
                for (int t = 1; t < m; ++t) {
                    const std::string tuple = tuple_text({{"k", k}, {"m", m}, {"s", s}, {"t", t}});
                    try {
                        mclaughlin_params(k, m, s, t, companion);
                    } catch (const InvalidCase& e) {
                        if (skipped) {
                            skipped->push_back(tuple + ": " + e.what());
                        }
                        continue;
                    }
                    cases.push_back({std::string(companion ? "mclaughlin-companion/" : "mclaughlin/") + tuple,
                                     [k, m, s, t, companion](Exponent n) {
                                         return mclaughlin_impl(k, m, s, t, n, companion);
                                     }});
                }
            }
        }
    }
    return cases;
}

GridRun run_grid(std::vector<Case> cases, std::vector<std::string> skipped, Exponent order, bool parallel)
{
    return {run_cases(cases, order, parallel), std::move(skipped)};
}

} // namespace

GridRun andrews_bressoud_grid(int k_max, Exponent order, bool parallel)
{
    std::vector<std::string> skipped;
    auto cases = andrews_bressoud_cases(k_max, &skipped);
    return run_grid(std::move(cases), std::move(skipped), order, parallel);
}

GridRun alladi_gordon_grid(int k_max, Exponent order, bool companion, bool parallel)
{
    std::vector<std::string> skipped;
    auto cases = alladi_gordon_cases(k_max, companion, &skipped);
    return run_grid(std::move(cases), std::move(skipped), order, parallel);
}

GridRun mclaughlin_grid(int km_max, Exponent order, bool companion, bool parallel)
{
    std::vector<std::string> skipped;
    auto cases = mclaughlin_cases(km_max, companion, &skipped);
    return run_grid(std::move(cases), std::move(skipped), order, parallel);
}

// --- fixed catalog ----------------------------------------------------------

const std::vector<NamedSeries>& named_series()
{
    static const std::vector<NamedSeries> table = {
        {"a", "(-q,-q^4;q^5)(q,q^9;q^10)^3"},
        {"b", "(-q^2,-q^3;q^5)(q^3,q^7;q^10)^3"},
        {"c", "(-q,-q^4;q^5)^3(q^3,q^7;q^10)"},
        {"d", "(-q^2,-q^3;q^5)^3(q,q^9;q^10)"},
        {"e-upper", "(-q,-q^4;q^5)(q^4,q^6;q^10)^3"},
        {"e-lower", "(q,q^4;q^5)(-q^4,-q^6;q^10)^3"},
        {"f-upper", "(-q^2,-q^3;q^5)(q^2,q^8;q^10)^3"},
        {"f-lower", "(q^2,q^3;q^5)(-q^2,-q^8;q^10)^3"},
        {"g", "(q,q^4;q^5)(-q,-q^9;q^10)^3"},
        {"h", "(q^2,q^3;q^5)(-q^3,-q^7;q^10)^3"},
        {"k", "(q,q^4;q^5)(q,q^9;q^10)^3"},
        {"l", "(q^2,q^3;q^5)(q^3,q^7;q^10)^3"},
        {"s", "(q,q^4;q^5)^3(-q^3,-q^7;q^10)"},
        {"t", "(q^2,q^3;q^5)^3(-q,-q^9;q^10)"},
        {"u", "(q,q^4;q^5)^3(q^3,q^7;q^10)"},
        {"v", "(q^2,q^3;q^5)^3(q,q^9;q^10)"},
        {"alpha", "(q^3,q^5;q^8)/(q,q^7;q^8)"},
        {"beta", "(q,q^7;q^8)/(q^3,q^5;q^8)"},
        {"gamma", "(q^5,q^7;q^12)/(q,q^11;q^12)"},
        {"delta", "(q,q^11;q^12)/(q^5,q^7;q^12)"},
        {"f1^4/f2^4", "(q;q)^4/(q^2;q^2)^4"},
        {"f2^4/f1^4", "(q^2;q^2)^4/(q;q)^4"},
    };
    return table;
}

ProductExpr series_expr(const std::string& name)
{
    for (const auto& s : named_series()) {
        if (s.name == name) {
            return normalize(dsl::parse(s.expr));
        }
    }
    throw std::invalid_argument("no catalogued series named '" + name + "'");
}

namespace {

Case claim_case(std::string id, Claim claim)
{
    return {id, [id, claim = std::move(claim)](Exponent n) { return check(id, claim, n); }};
}

Case vanishing_case(const std::string& suite, const std::string& name, Exponent m, std::vector<Exponent> residues)
{
    return claim_case(suite + "/" + name, vanishing(series_expr(name), m, std::move(residues)));
}

Claim progression_claim(ClaimKind kind, const std::string& left, Exponent lr, const std::string& right, Exponent rr,
                        Exponent shift)
{
    Claim c;
    c.kind = kind;
    c.left = Progression{series_expr(left), 5, {lr}};
    c.right = Progression{series_expr(right), 5, {rr}};
    c.index_shift = shift;
    return c;
}

std::vector<Case> ab_cases()
{
    const std::string suite = "ab-equalities/";
    std::vector<Case> cases;
    // b_{5n+1} = a_{5n-1} = a_{5(n-1)+4}
    cases.push_back(claim_case(suite + "b5n+1=a5n-1",
                               progression_claim(ClaimKind::equals_progression, "b", 1, "a", 4, -1)));
    cases.push_back(claim_case(suite + "b5n+2=a5n", progression_claim(ClaimKind::equals_progression, "b", 2, "a", 0, 0)));
    cases.push_back(claim_case(suite + "b5n+3=a5n+1",
                               progression_claim(ClaimKind::equals_progression, "b", 3, "a", 1, 0)));
    cases.push_back(claim_case(suite + "b5n+4=a5n+2",
                               progression_claim(ClaimKind::equals_progression, "b", 4, "a", 2, 0)));
    // sum b_{5n} q^n - sum_{n>=1} a_{5n-2} q^n = f1^4/f2^4
    Claim diff = progression_claim(ClaimKind::equals_series, "b", 0, "a", 3, -1);
    diff.closed_form = ClosedForm{series_expr("f1^4/f2^4"), 1, 0};
    cases.push_back(claim_case(suite + "difference", diff));
    return cases;
}

std::vector<Case> cd_cases()
{
    const std::string suite = "cd-equalities/";
    std::vector<Case> cases;
    for (Exponent r : {0, 2, 3, 4}) {
        const std::string rs = std::to_string(r);
        cases.push_back(claim_case(suite + "c5n+" + rs + "=d5n+" + rs,
                                   progression_claim(ClaimKind::equals_progression, "c", r, "d", r, 0)));
    }
    cases.push_back(claim_case(suite + "c5n+1>d5n+1",
                               progression_claim(ClaimKind::positive_difference, "c", 1, "d", 1, 0)));
    Claim diff = progression_claim(ClaimKind::equals_series, "c", 1, "d", 1, 0);
    diff.closed_form = ClosedForm{series_expr("f2^4/f1^4"), 4, 0};
    cases.push_back(claim_case(suite + "difference", diff));
    return cases;
}

std::vector<Case> cancellation_cases()
{
    using theta::CancellationCase;
    using theta::SignVariant;
    std::vector<Case> cases;
    for (auto c : {CancellationCase::e, CancellationCase::f}) {
        for (auto v : {SignVariant::upper, SignVariant::lower}) {
            const std::string id = std::string("theta-cancellation/") + (c == CancellationCase::e ? "e" : "f") + "-" +
                                   (v == SignVariant::upper ? "upper" : "lower");
            cases.push_back({id, [c, v](Exponent n) { return theta::theta_cancellation(c, v, n).report; }});
        }
    }
    return cases;
}

std::vector<Case> richmond_szekeres_cases()
{
    const std::string suite = "richmond-szekeres";
    return {vanishing_case(suite, "alpha", 4, {3}), vanishing_case(suite, "beta", 4, {2}),
            vanishing_case(suite, "gamma", 6, {5}), vanishing_case(suite, "delta", 6, {3})};
}

struct SuiteEntry {
    std::string name;
    std::function<std::vector<Case>(std::vector<std::string>*)> build;
};

const std::vector<SuiteEntry>& fixed_suites()
{
    static const std::vector<SuiteEntry> table = {
        {"hirschhorn",
         [](auto*) {
             return std::vector<Case>{vanishing_case("hirschhorn", "a", 5, {2, 4}),
                                      vanishing_case("hirschhorn", "b", 5, {1, 4})};
         }},
        {"tang",
         [](auto*) {
             return std::vector<Case>{vanishing_case("tang", "c", 5, {3, 4}), vanishing_case("tang", "d", 5, {3, 4})};
         }},
        {"ab-equalities", [](auto*) { return ab_cases(); }},
        {"cd-equalities", [](auto*) { return cd_cases(); }},
        {"ef-vanishing",
         [](auto*) {
             const std::string s = "ef-vanishing";
             return std::vector<Case>{vanishing_case(s, "e-upper", 5, {3}), vanishing_case(s, "f-upper", 5, {4}),
                                      vanishing_case(s, "e-lower", 5, {3}), vanishing_case(s, "f-lower", 5, {4})};
         }},
        {"gh-vanishing",
         [](auto*) {
             return std::vector<Case>{vanishing_case("gh-vanishing", "g", 5, {2}),
                                      vanishing_case("gh-vanishing", "h", 5, {1})};
         }},
        {"kl-vanishing",
         [](auto*) {
             return std::vector<Case>{vanishing_case("kl-vanishing", "k", 5, {4}),
                                      vanishing_case("kl-vanishing", "l", 5, {4})};
         }},
        {"st-vanishing",
         [](auto*) {
             return std::vector<Case>{vanishing_case("st-vanishing", "s", 5, {3}),
                                      vanishing_case("st-vanishing", "t", 5, {4})};
         }},
        {"uv-vanishing",
         [](auto*) {
             return std::vector<Case>{vanishing_case("uv-vanishing", "u", 5, {4}),
                                      vanishing_case("uv-vanishing", "v", 5, {3})};
         }},
        {"theta-cancellation", [](auto*) { return cancellation_cases(); }},
    };
    return table;
}

const std::vector<SuiteEntry>& all_suites()
{
    static const std::vector<SuiteEntry> table = [] {
        std::vector<SuiteEntry> t = fixed_suites();
        t.push_back({"richmond-szekeres", [](auto*) { return richmond_szekeres_cases(); }});
        t.push_back({"andrews-bressoud", [](auto* sk) { return andrews_bressoud_cases(10, sk); }});
        t.push_back({"alladi-gordon", [](auto* sk) { return alladi_gordon_cases(7, false, sk); }});
        t.push_back({"alladi-gordon-companion", [](auto* sk) { return alladi_gordon_cases(7, true, sk); }});
        t.push_back({"mclaughlin", [](auto* sk) { return mclaughlin_cases(6, false, sk); }});
        t.push_back({"mclaughlin-companion", [](auto* sk) { return mclaughlin_cases(6, true, sk); }});
        return t;
    }();
    return table;
}

} // namespace

std::vector<VerificationReport> richmond_szekeres_suite(Exponent order, bool parallel)
{
    return run_cases(richmond_szekeres_cases(), order, parallel);
}

std::vector<VerificationReport> catalog_suite(Exponent order, bool parallel)
{
    return run_cases(suite_cases("catalog"), order, parallel);
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& s : all_suites()) {
        names.push_back(s.name);
    }
    names.push_back("catalog");
    names.push_back("all");
    return names;
}

std::vector<Case> suite_cases(const std::string& name, std::vector<std::string>* skipped)
{
    auto append = [&](const std::vector<SuiteEntry>& entries) {
        std::vector<Case> out;
        for (const auto& s : entries) {
            auto more = s.build(skipped);
            out.insert(out.end(), more.begin(), more.end());
        }
        return out;
    };
    if (name == "catalog") {
        return append(fixed_suites());
    }
    if (name == "all") {
        return append(all_suites());
    }
    for (const auto& s : all_suites()) {
        if (s.name == name) {
            return s.build(skipped);
        }
    }
    std::string known;
    for (const auto& n : suite_names()) {
        known += (known.empty() ? "" : ", ") + n;
    }
    throw std::invalid_argument("unknown suite '" + name + "'; known suites: " + known);
}

// --- serialization ----------------------------------------------------------

namespace {

nlohmann::json progression_json(const Progression& p)
{
    return {{"expr", dsl::format(p.expr)}, {"modulus", p.modulus}, {"residues", p.residues}};
}

Progression progression_from(const nlohmann::json& j)
{
    return {normalize(dsl::parse(j.at("expr").get<std::string>())), j.at("modulus").get<Exponent>(),
            j.at("residues").get<std::vector<Exponent>>()};
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width > s.size() ? width - s.size() : 0, ' '); }

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

} // namespace

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json claim = {{"kind", to_string(r.claim.kind)},
                            {"left", progression_json(r.claim.left)},
                            {"right", nullptr},
                            {"index_shift", r.claim.index_shift},
                            {"closed_form", nullptr},
                            {"text", describe(r.claim)}};
    if (r.claim.right) {
        claim["right"] = progression_json(*r.claim.right);
    }
    if (r.claim.closed_form) {
        claim["closed_form"] = {{"expr", dsl::format(r.claim.closed_form->expr)},
                                {"scale", r.claim.closed_form->scale},
                                {"shift", r.claim.closed_form->shift}};
    }
    nlohmann::json j = {{"case_id", r.case_id},
                        {"claim", claim},
                        {"N", r.order},
                        {"checked_count", r.checked_count},
                        {"status", to_string(r.status)},
                        {"first_failure", nullptr},
                        {"detail", r.detail}};
    if (r.first_failure) {
        j["first_failure"] = {{"index", r.first_failure->index},
                              {"left", r.first_failure->left_value},
                              {"right", r.first_failure->right_value}};
    }
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    VerificationReport r;
    r.case_id = j.at("case_id").get<std::string>();
    const auto& c = j.at("claim");
    r.claim.kind = claim_kind_from_string(c.at("kind").get<std::string>());
    r.claim.left = progression_from(c.at("left"));
    if (!c.at("right").is_null()) {
        r.claim.right = progression_from(c.at("right"));
    }
    r.claim.index_shift = c.at("index_shift").get<Exponent>();
    if (!c.at("closed_form").is_null()) {
        const auto& cf = c.at("closed_form");
        r.claim.closed_form = ClosedForm{normalize(dsl::parse(cf.at("expr").get<std::string>())),
                                         cf.at("scale").get<long>(), cf.at("shift").get<Exponent>()};
    }
    r.order = j.at("N").get<Exponent>();
    r.checked_count = j.at("checked_count").get<std::int64_t>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (!j.at("first_failure").is_null()) {
        const auto& f = j.at("first_failure");
        r.first_failure = Failure{f.at("index").get<Exponent>(), f.at("left").get<std::string>(),
                                  f.at("right").get<std::string>()};
    }
    r.detail = j.value("detail", std::string());
    return r;
}

std::string render_jsonl(const std::vector<VerificationReport>& reports)
{
    std::string out;
    for (const auto& r : reports) {
        out += to_json(r).dump() + "\n";
    }
    return out;
}

std::string render_table(const std::vector<VerificationReport>& reports)
{
    std::size_t id_w = 7;
    for (const auto& r : reports) {
        id_w = std::max(id_w, r.case_id.size());
    }
    std::ostringstream os;
    os << pad("status", 8) << pad("case_id", id_w + 2) << pad("N", 7) << pad("checked", 9) << "claim\n";
    for (const auto& r : reports) {
        os << pad(to_string(r.status), 8) << pad(r.case_id, id_w + 2) << pad(std::to_string(r.order), 7)
           << pad(std::to_string(r.checked_count), 9) << describe(r.claim) << "\n";
        if (r.first_failure) {
            os << "        first failure at index " << r.first_failure->index << ": " << r.first_failure->left_value
               << " vs " << r.first_failure->right_value << "\n";
        }
        if (!r.detail.empty()) {
            os << "        " << r.detail << "\n";
        }
    }
    return os.str();
}

std::string render_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "case_id,status,N,checked_count,failure_index,failure_left,failure_right,claim\n";
    for (const auto& r : reports) {
        os << csv_quote(r.case_id) << "," << to_string(r.status) << "," << r.order << "," << r.checked_count << ",";
        if (r.first_failure) {
            os << r.first_failure->index << "," << csv_quote(r.first_failure->left_value) << ","
               << csv_quote(r.first_failure->right_value);
        } else {
            os << ",,";
        }
        os << "," << csv_quote(describe(r.claim)) << "\n";
    }
    return os.str();
}

} // namespace qseries::verify
