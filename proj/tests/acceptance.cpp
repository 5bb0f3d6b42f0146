// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "qseries/dsl.hpp"
#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/rr.hpp"
#include "qseries/theta.hpp"
#include "qseries/verify.hpp"

using namespace qseries;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok) {
                note << "first problem: ";
            } else {
                note << "; ";
            }
            note << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failures += out.ok ? 0 : 1;
    std::printf("AC%-2d %s  %s (%.2fs)%s%s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(), secs,
                out.note.str().empty() ? "" : "  ", out.note.str().c_str());
    std::fflush(stdout);
}

std::vector<VerificationReport> run_suite(const std::string& name, Exponent order,
                                          std::vector<std::string>* skipped = nullptr)
{
    return verify::run_cases(verify::suite_cases(name, skipped), order, true);
}

void require_all_pass(Outcome& out, const std::vector<VerificationReport>& reports, std::int64_t min_checked = 1)
{
    for (const auto& r : reports) {
        out.require(r.status == Status::pass, r.case_id + " " + to_string(r.status));
        out.require(r.checked_count >= min_checked, r.case_id + " checked only " + std::to_string(r.checked_count));
    }
}

const VerificationReport& find(const std::vector<VerificationReport>& reports, const std::string& id)
{
    for (const auto& r : reports) {
        if (r.case_id == id) {
            return r;
        }
    }
    throw std::runtime_error("missing case " + id);
}

Claim vanishing(const std::string& name, Exponent m, Exponent r)
{
    Claim c;
    c.kind = ClaimKind::vanishes;
    c.left = Progression{verify::series_expr(name), m, {r}};
    return c;
}

} // namespace

int main()
{
    std::printf("acceptance suite, %d OpenMP threads\n", kernels::max_threads());

    criterion(1, "a-series: a(5n+2) = a(5n+4) = 0 below q^1000 in < 30 s", [](Outcome& out) {
        const auto t0 = Clock::now();
        const auto reports = run_suite("hirschhorn", 1000);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const auto& a = find(reports, "hirschhorn/a");
        out.require(a.status == Status::pass, "a-series progression nonzero");
        out.require(a.checked_count == 400, "expected 400 checked coefficients");
        out.require(secs < 30.0, "took " + std::to_string(secs) + " s");
    });

    criterion(2, "c, d series: c(5n+3) = c(5n+4) = d(5n+3) = d(5n+4) = 0 below q^1000", [](Outcome& out) {
        const auto reports = run_suite("tang", 1000);
        out.require(reports.size() == 2, "expected 2 cases");
        require_all_pass(out, reports, 400);
    });

    criterion(3, "b/a equalities below q^1000; difference identity f1^4/f2^4 through n = 199", [](Outcome& out) {
        const auto reports = run_suite("ab-equalities", 1000);
        out.require(reports.size() == 5, "expected 5 cases");
        require_all_pass(out, reports, 199);
        out.require(find(reports, "ab-equalities/difference").checked_count == 200, "difference window is not 200");
    });

    criterion(4, "c/d equalities below q^1000; 4 f2^4/f1^4 through n = 199; positivity; c1 - d1 = 4", [](Outcome& out) {
        const auto reports = run_suite("cd-equalities", 1000);
        out.require(reports.size() == 6, "expected 6 cases");
        require_all_pass(out, reports, 200);
        out.require(find(reports, "cd-equalities/difference").checked_count == 200, "difference window is not 200");
        out.require(find(reports, "cd-equalities/c5n+1>d5n+1").checked_count == 200, "positivity window is not 200");
        const Series c = expand(verify::series_expr("c"), 2);
        const Series d = expand(verify::series_expr("d"), 2);
        out.require(c.coeff(1) == 3 && d.coeff(1) == -1, "c1 = 3, d1 = -1 expected");
        out.require(c.coeff(1) - d.coeff(1) == 4, "c1 - d1 != 4");
    });

    criterion(5, "e..v vanishing below q^1000; theta component identities and pair cancellations", [](Outcome& out) {
        std::vector<VerificationReport> reports;
        for (const char* s : {"ef-vanishing", "gh-vanishing", "kl-vanishing", "st-vanishing", "uv-vanishing"}) {
            const auto r = run_suite(s, 1000);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        out.require(reports.size() == 12, "expected 12 progressions");
        require_all_pass(out, reports, 200);
        int components = 0, pairs = 0;
        for (auto c : {theta::CancellationCase::e, theta::CancellationCase::f}) {
            for (auto v : {theta::SignVariant::upper, theta::SignVariant::lower}) {
                const auto res = theta::theta_cancellation(c, v, 1000);
                for (bool ok : res.component_identity) {
                    components += ok;
                }
                for (bool ok : res.pair_cancellation) {
                    pairs += ok;
                }
                out.require(res.decomposition && res.assembly, res.report.case_id + " assembly");
                out.require(res.report.status == Status::pass, res.report.case_id);
            }
        }
        out.require(components == 32, std::to_string(components) + "/32 component identities");
        out.require(pairs == 16, std::to_string(pairs) + "/16 pair cancellations");
    });

    criterion(6, "alpha(4n+3), beta(4n+2), gamma(6n+5), delta(6n+3) zero below q^800", [](Outcome& out) {
        const auto reports = verify::richmond_szekeres_suite(800, true);
        out.require(reports.size() == 4, "expected 4 cases");
        require_all_pass(out, reports, 130);
    });

    criterion(7, "Andrews-Bressoud grid k <= 10 at N = 600", [](Outcome& out) {
        const auto grid = verify::andrews_bressoud_grid(10, 600, true);
        out.require(grid.reports.size() >= 15, "only " + std::to_string(grid.reports.size()) + " cases");
        require_all_pass(out, grid.reports, 60);
        out.note << grid.reports.size() << " cases";
    });

    criterion(8, "Alladi-Gordon grid k <= 7 at N = 400, companions for odd k", [](Outcome& out) {
        const auto main = verify::alladi_gordon_grid(7, 400, false, true);
        const auto comp = verify::alladi_gordon_grid(7, 400, true, true);
        require_all_pass(out, main.reports, 57);
        require_all_pass(out, comp.reports, 57);
        out.require(!main.reports.empty() && !comp.reports.empty(), "empty grid");
        out.note << main.reports.size() << " + " << comp.reports.size() << " companion cases";
    });

    criterion(9, "McLaughlin grid k, m <= 6, r - tk >= 1 at N = 400, including k <= m", [](Outcome& out) {
        const auto main = verify::mclaughlin_grid(6, 400, false, true);
        const auto comp = verify::mclaughlin_grid(6, 400, true, true);
        require_all_pass(out, main.reports, 66);
        require_all_pass(out, comp.reports, 66);
        int k_le_m = 0;
        for (int k = 2; k <= 6; ++k) {
            for (int m = k; m <= 6; ++m) {
                for (int s = 0; s < k; ++s) {
                    for (int t = 1; t < m; ++t) {
                        try {
                            verify::mclaughlin_params(k, m, s, t, false);
                            ++k_le_m;
                        } catch (const InvalidCase&) {
                        }
                    }
                }
            }
        }
        out.require(k_le_m > 0, "no k <= m case in the grid");
        out.note << main.reports.size() << " + " << comp.reports.size() << " companion cases, " << k_le_m
                 << " with k <= m";
    });

    criterion(10, "engine oracles: partitions, pentagonal, triple product, theta identities, R(q) quotients", [](Outcome& out) {
        const auto p = oracle::partition_counts(50);
        out.require(oracle::to_vec(inverse(eta_like(1, 51)), 0, 51) == p, "1/(q;q) != p(0..50)");
        out.require(p[50] == 204226, "partition oracle p(50)");
        out.require(oracle::to_vec(eta_like(1, 500), 0, 500) == oracle::pentagonal(500), "pentagonal to 500");

        std::mt19937_64 rng(1729);
        std::uniform_int_distribution<int> exp_dist(-3, 12), sign_dist(0, 1);
        int pairs = 0;
        while (pairs < 200) {
            const theta::SignedMonomial a{sign_dist(rng) ? 1 : -1, exp_dist(rng)};
            const theta::SignedMonomial b{sign_dist(rng) ? 1 : -1, exp_dist(rng)};
            if (a.exponent + b.exponent < 1) {
                continue;
            }
            ++pairs;
            out.require(theta::theta_series({a, b}, 200) == theta::triple_product({a, b}, 200),
                        "triple product at " + theta::to_string(a) + ", " + theta::to_string(b));
        }

        std::uniform_int_distribution<int> small_exp(-2, 6);
        for (int which = 1; which <= 4; ++which) {
            int valid = 0;
            while (valid < 100) {
                const theta::SignedMonomial a{sign_dist(rng) ? 1 : -1, small_exp(rng)};
                const theta::SignedMonomial b{sign_dist(rng) ? 1 : -1, small_exp(rng)};
                Series r;
                try {
                    r = theta::theta_identity_residual(which, a, b, 150);
                } catch (const DivergentParameters&) {
                    continue;
                }
                ++valid;
                out.require(r.is_zero() && r.order() >= 150, "identity " + std::to_string(which) + " at " +
                                                                  theta::to_string(a) + ", " + theta::to_string(b));
            }
        }
        out.require(rr::bb_residual_1(500).is_zero(), "first R(q) quotient identity");
        out.require(rr::bb_residual_2(500).is_zero(), "second R(q) quotient identity");
    });

    criterion(11, "properties: dissection round trip, ring laws, truncation, parse/format, mutation", [](Outcome& out) {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            const Series s = oracle::random_series(rng, trial % 9 - 4, 90);
            for (Exponent m : {2, 3, 5, 10}) {
                std::vector<Series> parts;
                for (Exponent r = 0; r < m; ++r) {
                    parts.push_back(dissect(s, m, r));
                }
                const Series back = interleave(parts, m);
                out.require(back == s && back.order() == s.order(), "interleave(dissect) round trip");
            }
            const Series a = oracle::random_series(rng, 0, 80);
            const Series b = oracle::random_series(rng, 0, 70);
            const Series c = oracle::random_series(rng, 0, 64);
            out.require(a * b == b * a, "commutativity");
            out.require((a * b) * c == a * (b * c), "associativity");
            out.require(a * (b + c) == a * b + a * c, "distributivity");
            out.require(a * Series::one(80) == a, "identity");

            const Series unit = Series::one(80) + shift(a, 1).truncated(80);
            const Series full = dissect(inverse(unit * unit) - b, 3, 1);
            for (Exponent n : {10, 41, 70}) {
                const Series small = dissect(inverse(unit.truncated(n) * unit.truncated(n)) - b.truncated(n), 3, 1);
                out.require(full == small && small.order() <= full.order(), "truncation monotonicity");
            }
        }

        std::uniform_int_distribution<int> mod(1, 15), mult(-4, 4), sign(0, 1), count(0, 7);
        for (int trial = 0; trial < 300; ++trial) {
            ProductExpr e;
            const int n = count(rng);
            for (int i = 0; i < n; ++i) {
                const int m = mod(rng);
                std::uniform_int_distribution<int> off(0, 2 * m);
                const int k = mult(rng);
                e.factors.push_back({sign(rng) ? 1 : -1, off(rng), m, k == 0 ? 1 : k});
            }
            out.require(dsl::parse(dsl::format(e)) == normalize(e), "parse(format(e)) != normalize(e)");
        }

        const auto mutant = verify::check("mutant", vanishing("a", 5, 3), 500);
        out.require(mutant.status == Status::fail, "perturbed residue passed");
        out.require(mutant.first_failure && mutant.first_failure->index < 100, "perturbed residue not caught early");
    });

    criterion(12, "qseries verify --suite all --order 500 exits 0 in < 300 s", [](Outcome& out) {
        const auto t0 = Clock::now();
        const std::string cmd = std::string(QSERIES_CLI) + " verify --suite all --order 500 --parallel > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        out.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status " + std::to_string(status));
        out.require(secs < 300.0, "took " + std::to_string(secs) + " s");
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
