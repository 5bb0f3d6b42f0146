#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qseries/errors.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

using namespace qseries;
using oracle::to_series;
using oracle::to_vec;
using oracle::Vec;

TEST_CASE("make_monomial")
{
    const Series one = make_monomial(1, 0, 10);
    CHECK(one.base() == 0);
    CHECK(one.order() == 10);
    CHECK(to_vec(one, 0, 10) == Vec{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});

    const Series m = make_monomial(-3, 2, 5);
    CHECK(to_vec(m, 0, 5) == Vec{0, 0, -3, 0, 0});
    CHECK_THROWS_AS(m.coeff(5), RangeError);

    const Series inv_q = make_monomial(1, -1, 5);
    CHECK(inv_q.base() == -1);
    CHECK(inv_q.coeff(-1) == 1);
    CHECK(inv_q.coeff(-7) == 0);

    CHECK_THROWS_AS(make_monomial(1, 5, 5), InvalidOrder);
}

TEST_CASE("add and sub")
{
    CHECK((Series::one(8) + scale(Series::one(8), -1)).is_zero());
    const Series a = to_series({1, 1});
    const Series b = to_series({1, -1});
    CHECK(to_vec(add(a, b), 0, 2) == Vec{2, 0});
    CHECK(to_vec(sub(a, b), 0, 2) == Vec{0, 2});

    const Series p = to_series(oracle::pentagonal(40));
    CHECK((p + (-p)).is_zero());

    // Sum is known only below the smaller order.
    CHECK(add(Series::one(4), Series::one(9)).order() == 4);
}

TEST_CASE("mul")
{
    const Series s = mul(to_series({1, -1, 0, 0, 0}), to_series({1, 1, 1, 1, 1}));
    CHECK(s.order() == 5);
    CHECK(to_vec(s, 0, 5) == Vec{1, 0, 0, 0, 0});

    const Series r = to_series({3, -2, 7, 0, 5});
    CHECK(mul(r, Series::one(5)) == r);

    CHECK(to_vec(pow(to_series({1, 1, 0, 0}), 2), 0, 4) == Vec{1, 2, 1, 0});
    CHECK(to_vec(pow(to_series({2, 1, 0}), 0), 0, 3) == Vec{1, 0, 0});
    CHECK(to_vec(pow(to_series({2, 1, 3, 0, 0}), 3), 0, 5) == Vec{8, 12, 42, 37, 63});
}

TEST_CASE("mul keeps the provable window")
{
    // q^2 known below q^6 times 1 + q known below q^4: q^2 + q^3 + ? from q^6.
    const Series a(2, {1, 0, 0, 0});
    const Series b(0, {1, 1, 0, 0});
    const Series p = a * b;
    CHECK(p.base() == 2);
    CHECK(p.order() == 6);
    CHECK(to_vec(p, 2, 6) == Vec{1, 1, 0, 0});

    // Leading zeros are trimmed before the window is computed.
    const Series padded(0, {0, 0, 1, 0, 0, 0});
    CHECK((padded * b).order() == 6);
}

TEST_CASE("inverse")
{
    CHECK(to_vec(inverse(to_series({1, -1, 0, 0, 0, 0})), 0, 6) == Vec{1, 1, 1, 1, 1, 1});
    CHECK(to_vec(inverse(Series::one(7)), 0, 7) == Vec{1, 0, 0, 0, 0, 0, 0});

    const Vec p = oracle::partition_counts(10);
    CHECK(to_vec(inverse(to_series(oracle::pentagonal(11))), 0, 11) == p);

    const Series laurent = inverse(Series(2, {-1, 3, 0, 1}));
    CHECK(laurent.base() == -2);
    CHECK(laurent.order() == 2);
    CHECK(to_vec(laurent, -2, 2) == Vec{-1, -3, -9, -28});

    CHECK_THROWS_AS(inverse(to_series({2, 1})), NotInvertible);
    CHECK_THROWS_AS(inverse(Series::zero(5)), NotInvertible);
}

TEST_CASE("dissect and interleave")
{
    CHECK(to_vec(dissect(make_monomial(1, 3, 20), 5, 3), 0, 4) == Vec{1, 0, 0, 0});
    const Series geo = to_series(Vec(30, 1));
    CHECK(to_vec(dissect(geo, 2, 0), 0, 15) == Vec(15, 1));

    const Series a = expand(ProductExpr{{{-1, 1, 5, 1}, {-1, 4, 5, 1}, {1, 1, 10, 3}, {1, 9, 10, 3}}}, 200);
    CHECK(dissect(a, 5, 2).is_zero());
    CHECK(dissect(a, 5, 2).order() == 40);
    CHECK(dissect(a, 5, 4).is_zero());
    CHECK_FALSE(dissect(a, 5, 1).is_zero());

    CHECK_THROWS_AS(dissect(a, 5, 5), InvalidResidue);
    CHECK_THROWS_AS(dissect(a, 0, 0), InvalidResidue);

    const std::vector<Series> two{Series::one(3), Series::zero(3)};
    CHECK(to_vec(interleave(two, 2), 0, 6) == Vec{1, 0, 0, 0, 0, 0});
    const std::vector<Series> zeros(5, Series::zero(4));
    CHECK(interleave(zeros, 5).is_zero());
    CHECK_THROWS_AS(interleave(two, 3), ArityError);
}

TEST_CASE("shift scale coeff")
{
    CHECK(to_vec(shift(Series::one(3), 2), 0, 5) == Vec{0, 0, 1, 0, 0});
    CHECK(to_vec(scale(to_series({1, 1}), 4), 0, 2) == Vec{4, 4});
    CHECK(coeff(pow(to_series({1, 1, 0, 0}), 3), 1) == 3);
    CHECK(is_zero(Series::zero(3)));

    const auto cmp = equal_up_to(to_series({1, 2, 3, 4}), to_series({1, 2, 5, 4}), 10);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.first_mismatch == 2);
    CHECK(cmp.checked_below == 4);
    CHECK(equal_up_to(to_series({1, 2, 3, 4}), to_series({1, 2, 5, 4}), 2).equal);
}

TEST_CASE("floor and ceil division")
{
    CHECK(floor_div(7, 5) == 1);
    CHECK(floor_div(-7, 5) == -2);
    CHECK(floor_div(-5, 5) == -1);
    CHECK(ceil_div(7, 5) == 2);
    CHECK(ceil_div(-7, 5) == -1);
    CHECK(ceil_div(10, 5) == 2);
}

TEST_CASE("property: dissection round trip")
{
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> base_dist(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const Series s = oracle::random_series(rng, base_dist(rng), 70);
        for (Exponent m : {2, 3, 5, 10}) {
            std::vector<Series> parts;
            for (Exponent r = 0; r < m; ++r) {
                parts.push_back(dissect(s, m, r));
            }
            const Series back = interleave(parts, m);
            CHECK(back.order() == s.order());
            CHECK(back == s);
        }
    }
}

TEST_CASE("property: ring laws")
{
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        const Series a = oracle::random_series(rng, 0, 80);
        const Series b = oracle::random_series(rng, 0, 72);
        const Series c = oracle::random_series(rng, 0, 64);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Series::one(80) == a);
        CHECK((a * b).order() >= 72);
    }
}

TEST_CASE("property: inverse")
{
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 25; ++trial) {
        Series s = oracle::random_series(rng, static_cast<Exponent>(trial % 7) - 3, 64);
        std::vector<Coeff> c(s.coeffs().begin(), s.coeffs().end());
        c[0] = trial % 2 ? 1 : -1;
        s = Series(s.base(), c);
        const Series p = s * inverse(s);
        CHECK(p == Series::one(p.order()));
        CHECK(p.order() == 64);
    }
}

TEST_CASE("property: truncation monotonicity")
{
    std::mt19937_64 rng(404);
    auto pipeline = [](const Series& a, const Series& b, Exponent n) {
        const Series x = a.truncated(n);
        const Series y = b.truncated(n);
        return dissect(inverse(x * y + x) - y, 2, 1);
    };
    for (int trial = 0; trial < 20; ++trial) {
        Series a = oracle::random_series(rng, 0, 120);
        std::vector<Coeff> c(a.coeffs().begin(), a.coeffs().end());
        c[0] = 1;
        a = Series(0, c);
        Series b = oracle::random_series(rng, 0, 120);
        c.assign(b.coeffs().begin(), b.coeffs().end());
        c[0] = 0;
        b = Series(0, c);
        const Series full = pipeline(a, b, 120);
        for (Exponent n : {7, 33, 64, 101}) {
            const Series small = pipeline(a, b, n);
            CHECK(full.truncated(small.order()) == small);
            CHECK(small.order() <= full.order());
        }
    }
}

TEST_CASE("property: progression shift coherence")
{
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
        const Series s = oracle::random_series(rng, 0, 90);
        for (Exponent m : {2, 5, 7}) {
            for (Exponent r = 0; r < m; ++r) {
                CHECK(dissect(shift(s, m), m, r) == shift(dissect(s, m, r), 1));
            }
        }
    }
}
