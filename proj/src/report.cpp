#include "qseries/report.hpp"

#include <stdexcept>

#include "qseries/dsl.hpp"

namespace qseries {

const char* to_string(ClaimKind kind) noexcept
{
    switch (kind) {
    case ClaimKind::vanishes: return "vanishes";
    case ClaimKind::equals_progression: return "equals_progression";
    case ClaimKind::equals_series: return "equals_series";
    case ClaimKind::positive_difference: return "positive_difference";
    }
    return "?";
}

const char* to_string(Status status) noexcept
{
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    }
    return "?";
}

ClaimKind claim_kind_from_string(const std::string& s)
{
    for (auto k : {ClaimKind::vanishes, ClaimKind::equals_progression, ClaimKind::equals_series,
                   ClaimKind::positive_difference}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown claim kind '" + s + "'");
}

Status status_from_string(const std::string& s)
{
    for (auto st : {Status::pass, Status::fail, Status::vacuous}) {
        if (s == to_string(st)) {
            return st;
        }
    }
    throw std::invalid_argument("unknown status '" + s + "'");
}

namespace {

std::string index_text(Exponent m, Exponent r, Exponent shift)
{
    std::string n = shift == 0 ? "n" : "(n" + std::string(shift > 0 ? "+" : "") + std::to_string(shift) + ")";
    return std::to_string(m) + n + (r == 0 ? "" : "+" + std::to_string(r));
}

std::string progression_text(const Progression& p, Exponent shift)
{
    std::string out = dsl::format(p.expr) + " @ ";
    if (p.residues.size() == 1) {
        return out + index_text(p.modulus, p.residues[0], shift);
    }
    out += std::to_string(p.modulus) + "n+{";
    for (std::size_t i = 0; i < p.residues.size(); ++i) {
        out += (i ? "," : "") + std::to_string(p.residues[i]);
    }
    return out + "}";
}

} // namespace

std::string describe(const Claim& claim)
{
    std::string out = std::string(to_string(claim.kind)) + " " + progression_text(claim.left, 0);
    if (claim.right) {
        out += (claim.kind == ClaimKind::equals_progression ? " == " : " - ") +
               progression_text(*claim.right, claim.index_shift);
    }
    if (claim.closed_form) {
        const auto& cf = *claim.closed_form;
        out += " == ";
        if (cf.scale != 1) {
            out += std::to_string(cf.scale) + "*";
        }
        if (cf.shift != 0) {
            out += "q^" + std::to_string(cf.shift) + "*";
        }
        out += dsl::format(cf.expr);
    }
    if (claim.kind == ClaimKind::positive_difference) {
        out += " > 0";
    }
    return out;
}

} // namespace qseries
