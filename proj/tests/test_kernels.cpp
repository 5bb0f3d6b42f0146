#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qseries/kernels.hpp"

using namespace qseries;
using namespace qseries::kernels;

namespace {

std::vector<mpz_class> random_coeffs(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<long> val(-1000000, 1000000);
    std::vector<mpz_class> out(n);
    for (auto& c : out) {
        if (keep(rng)) {
            c = val(rng);
            c *= c; // push into multi-limb territory once squared below
            c *= val(rng);
        }
    }
    return out;
}

} // namespace

TEST_CASE("convolve serial matches parallel")
{
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 5u, 255u, 256u, 1000u, 1500u}) {
        for (double density : {0.05, 0.5, 1.0}) {
            const auto a = random_coeffs(rng, n, density);
            const auto b = random_coeffs(rng, n + 7, density);
            std::vector<mpz_class> s(n), p(n), d(n);
            convolve_serial(a, b, s);
            convolve_parallel(a, b, p);
            convolve(a, b, d);
            CHECK(s == p);
            CHECK(s == d);
        }
    }
}

TEST_CASE("convolve against schoolbook")
{
    const oracle::Vec a{1, -2, 3, 0, 5};
    const oracle::Vec b{2, 0, -1, 4};
    const auto expected = oracle::poly_mul(a, b, 6);
    std::vector<mpz_class> ma(a.begin(), a.end()), mb(b.begin(), b.end()), out(6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma[i] = static_cast<long>(a[i]);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        mb[i] = static_cast<long>(b[i]);
    }
    convolve_serial(ma, mb, out);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(out[i] == static_cast<long>(expected[i]));
    }
}

TEST_CASE("reciprocal")
{
    std::vector<mpz_class> a(12, 0), out(12);
    a[0] = 1;
    a[1] = -1;
    reciprocal(a, out);
    for (const auto& c : out) {
        CHECK(c == 1);
    }
    a[0] = -1;
    a[1] = 0;
    reciprocal(a, out);
    CHECK(out[0] == -1);
    CHECK(out[5] == 0);
}

TEST_CASE("mul_linear_factor")
{
    std::vector<mpz_class> c(8, 0);
    c[0] = 1;
    mul_linear_factor(c, 1, 2);  // (1 - q^2)
    mul_linear_factor(c, -1, 3); // (1 + q^3)
    const oracle::Vec expected{1, 0, -1, 1, 0, -1, 0, 0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i] == static_cast<long>(expected[i]));
    }
    mul_linear_factor(c, -1, 0);
    CHECK(c[0] == 2);
}

TEST_CASE("quad_form_counts serial matches parallel and lattice oracle")
{
    const std::vector<QuadForm> forms{
        {1, 1, 0, 1, 0, 0},      {-1, 20, 2, 20, 1, 0},  {1, 20, 18, 20, 21, 12},
        {-1, 100, 125, 100, 40, 43}, {1, 3, 1, 5, -2, 7}, {-1, 1, 1, 2, 0, 0},
    };
    for (const auto& f : forms) {
        const auto s = quad_form_counts_serial(f, 0, 900);
        const auto p = quad_form_counts_parallel(f, 0, 900);
        CHECK(s == p);
        CHECK(quad_form_counts(f, 0, 900) == s);
        CHECK(s == oracle::lattice_counts(f.eps, f.a, f.b, f.c, f.d, f.shift, 40, 900));
    }
}

TEST_CASE("quadratic helpers")
{
    CHECK(quadratic_min(1, 0) == 0);
    CHECK(quadratic_min(2, 1) == 0);   // min of 2k^2 + k over integers
    CHECK(quadratic_min(1, -3) == -2); // k = 1 or 2
    const auto range = quadratic_below(1, 0, 10);
    for (std::int64_t k = -10; k <= 10; ++k) {
        if (k * k < 10) {
            CHECK(range.lo <= k);
            CHECK(k <= range.hi);
        }
    }
    CHECK(quadratic_below(1, 0, -1).lo > quadratic_below(1, 0, -1).hi);
}
