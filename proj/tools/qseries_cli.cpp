// qseries: expand, dissect, diff and verify q-products from the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/dsl.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/verify.hpp"

namespace {

using namespace qseries;

enum class Format { text, json, csv };

struct CliConfig {
    Exponent order = 500;
    Format format = Format::text;
    std::string suite = "all";
    bool parallel = false;
};

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Series expand_text(const std::string& src, Exponent order)
{
    return expand(dsl::parse(src), order);
}

std::string render_series(const Series& s, Format format)
{
    std::ostringstream os;
    switch (format) {
    case Format::text:
        if (s.base() >= 0) {
            for (Exponent e = 0; e < s.order(); ++e) {
                os << (e ? " " : "") << s.coeff(e).get_str();
            }
            os << "\n";
        } else {
            for (Exponent e = s.base(); e < s.order(); ++e) {
                os << e << " " << s.coeff(e).get_str() << "\n";
            }
        }
        break;
    case Format::csv:
        os << "exponent,coefficient\n";
        for (Exponent e = std::min<Exponent>(s.base(), 0); e < s.order(); ++e) {
            os << e << "," << s.coeff(e).get_str() << "\n";
        }
        break;
    case Format::json: {
        nlohmann::json coeffs = nlohmann::json::array();
        const Exponent lo = std::min<Exponent>(s.base(), 0);
        for (Exponent e = lo; e < s.order(); ++e) {
            coeffs.push_back(s.coeff(e).get_str());
        }
        os << nlohmann::json{{"base", lo}, {"order", s.order()}, {"coefficients", coeffs}}.dump() << "\n";
        break;
    }
    }
    return os.str();
}

int cmd_expand(const std::string& expr, const CliConfig& cfg)
{
    std::cout << render_series(expand_text(expr, cfg.order), cfg.format);
    return exit_pass;
}

int cmd_dissect(const std::string& expr, Exponent m, Exponent r, const CliConfig& cfg)
{
    if (m < 1 || r < 0 || r >= m) {
        throw UsageError("dissect needs m >= 1 and 0 <= r < m");
    }
    std::cout << render_series(dissect(expand_text(expr, cfg.order), m, r), cfg.format);
    return exit_pass;
}

int cmd_diff(const std::string& a, const std::string& b, const CliConfig& cfg)
{
    const Series d = expand_text(a, cfg.order) - expand_text(b, cfg.order);
    std::cout << render_series(d, cfg.format);
    std::optional<Exponent> first;
    for (Exponent e = std::min<Exponent>(d.base(), 0); e < d.order(); ++e) {
        if (sgn(d.coeff(e)) != 0) {
            first = e;
            break;
        }
    }
    if (cfg.format == Format::json) {
        nlohmann::json summary = {{"zero", !first.has_value()}, {"checked_below", d.order()}};
        if (first) {
            summary["first_nonzero"] = {{"index", *first}, {"value", d.coeff(*first).get_str()}};
        }
        std::cout << summary.dump() << "\n";
    } else if (first) {
        std::cout << "# first nonzero at index " << *first << ": " << d.coeff(*first).get_str() << "\n";
    } else {
        std::cout << "# zero below q^" << d.order() << "\n";
    }
    return exit_pass;
}

int cmd_verify(const CliConfig& cfg)
{
    std::vector<std::string> skipped;
    std::vector<verify::Case> cases;
    try {
        cases = verify::suite_cases(cfg.suite, &skipped);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto reports = verify::run_cases(cases, cfg.order, cfg.parallel);
    switch (cfg.format) {
    case Format::text:
        std::cout << verify::render_table(reports);
        break;
    case Format::json:
        std::cout << verify::render_jsonl(reports);
        break;
    case Format::csv:
        std::cout << verify::render_csv(reports);
        break;
    }
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.status == Status::pass;
    }
    std::cerr << passed << "/" << reports.size() << " cases pass at N=" << cfg.order;
    if (!skipped.empty()) {
        std::cerr << "; " << skipped.size() << " invalid tuples skipped";
    }
    std::cerr << "\n";
    return passed == reports.size() ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact q-series expansion and identity verification"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("QS_ORDER")) {
        try {
            cfg.order = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "QS_ORDER is not an integer: " << env << "\n";
            return exit_usage;
        }
    }
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order,-N", cfg.order, "Truncation order N")->check(CLI::Range(Exponent{2}, Exponent{1} << 40));
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    };

    std::string expr_a, expr_b;
    Exponent m = 0, r = 0;

    auto* expand_cmd = app.add_subcommand("expand", "Print coefficients of a product expression");
    expand_cmd->add_option("expr", expr_a, "Product expression")->required();
    add_common(expand_cmd);

    auto* dissect_cmd = app.add_subcommand("dissect", "Print the m-dissection component at residue r");
    dissect_cmd->add_option("expr", expr_a, "Product expression")->required();
    dissect_cmd->add_option("m", m, "Modulus")->required();
    dissect_cmd->add_option("r", r, "Residue")->required();
    add_common(dissect_cmd);

    auto* diff_cmd = app.add_subcommand("diff", "Print expand(A) - expand(B) with a summary line");
    diff_cmd->add_option("A", expr_a, "First expression")->required();
    diff_cmd->add_option("B", expr_b, "Second expression")->required();
    add_common(diff_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", cfg.suite, "Suite name, or 'all'");
    verify_cmd->add_flag("--parallel", cfg.parallel, "Run cases in parallel");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }
    if (cfg.order < 2) {
        std::cerr << "order must be at least 2\n";
        return exit_usage;
    }

    const std::string* parsing = &expr_a;
    try {
        if (*expand_cmd) {
            return cmd_expand(expr_a, cfg);
        }
        if (*dissect_cmd) {
            return cmd_dissect(expr_a, m, r, cfg);
        }
        if (*diff_cmd) {
            dsl::parse(expr_a);
            parsing = &expr_b;
            dsl::parse(expr_b);
            return cmd_diff(expr_a, expr_b, cfg);
        }
        return cmd_verify(cfg);
    } catch (const dsl::ParseError& e) {
        std::cerr << dsl::caret_diagnostic(*parsing, e) << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
