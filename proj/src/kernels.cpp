#include "qseries/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "qseries/series.hpp"

namespace qseries::kernels {

namespace {

std::vector<std::size_t> nonzero_positions(std::span<const mpz_class> a)
{
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            nz.push_back(i);
        }
    }
    return nz;
}

// out[k] for a single k, walking the nonzero positions of the sparse side.
void convolve_one(std::span<const mpz_class> sparse, const std::vector<std::size_t>& nz,
                  std::span<const mpz_class> dense, std::size_t k, mpz_class& acc)
{
    acc = 0;
    const std::size_t lo = k >= dense.size() ? k - dense.size() + 1 : 0;
    auto it = std::lower_bound(nz.begin(), nz.end(), lo);
    for (; it != nz.end() && *it <= k; ++it) {
        mpz_addmul(acc.get_mpz_t(), sparse[*it].get_mpz_t(), dense[k - *it].get_mpz_t());
    }
}

struct Plan {
    std::span<const mpz_class> sparse, dense;
    std::vector<std::size_t> nz;
};

Plan make_plan(std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    auto nza = nonzero_positions(a);
    auto nzb = nonzero_positions(b);
    if (nzb.size() < nza.size()) {
        return {b, a, std::move(nzb)};
    }
    return {a, b, std::move(nza)};
}

// floor(sqrt(v)) for v >= 0.
__int128 isqrt(__int128 v)
{
    auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

std::int64_t eval(std::int64_t a, std::int64_t b, std::int64_t x) { return a * x * x + b * x; }

// Returns false if some exponent of the row falls below lo.
bool accumulate_row(const QuadForm& f, std::int64_t m, std::int64_t lo, std::int64_t hi,
                    std::vector<std::int64_t>& counts)
{
    const std::int64_t row = f.shift + eval(f.a, f.b, m);
    const IntRange ns = quadratic_below(f.c, f.d, hi - row);
    for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
        const std::int64_t e = row + eval(f.c, f.d, n);
        if (e >= hi) {
            continue;
        }
        if (e < lo) {
            return false;
        }
        const bool odd = ((m + n) % 2) != 0;
        counts[static_cast<std::size_t>(e - lo)] += (f.eps < 0 && odd) ? -1 : 1;
    }
    return true;
}

[[noreturn]] void below_window()
{
    throw std::logic_error("quad_form_counts: exponent below requested window");
}

IntRange row_range(const QuadForm& f, std::int64_t hi)
{
    if (f.a < 1 || f.c < 1) {
        throw std::invalid_argument("quadratic form needs positive leading coefficients");
    }
    return quadratic_below(f.a, f.b, hi - f.shift - quadratic_min(f.c, f.d));
}

} // namespace

int max_threads() { return omp_get_max_threads(); }

void convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out)
{
    const Plan p = make_plan(a, b);
    mpz_class acc;
    for (std::size_t k = 0; k < out.size(); ++k) {
        convolve_one(p.sparse, p.nz, p.dense, k, acc);
        out[k] = acc;
    }
}

void convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out)
{
    const Plan p = make_plan(a, b);
    const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel
    {
        mpz_class acc;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t k = 0; k < n; ++k) {
            convolve_one(p.sparse, p.nz, p.dense, static_cast<std::size_t>(k), acc);
            out[static_cast<std::size_t>(k)] = acc;
        }
    }
}

void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out)
{
    if (out.size() >= parallel_threshold && max_threads() > 1 && !omp_in_parallel()) {
        convolve_parallel(a, b, out);
    } else {
        convolve_serial(a, b, out);
    }
}

void reciprocal(std::span<const mpz_class> a, std::span<mpz_class> out)
{
    if (out.empty()) {
        return;
    }
    if (a.size() < out.size() || (a[0] != 1 && a[0] != -1)) {
        throw std::invalid_argument("reciprocal: leading coefficient must be a unit");
    }
    const bool negate = a[0] == 1;
    auto nz = nonzero_positions(a);
    mpz_class acc;
    out[0] = a[0];
    for (std::size_t k = 1; k < out.size(); ++k) {
        acc = 0;
        for (std::size_t i : nz) {
            if (i == 0) {
                continue;
            }
            if (i > k) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), out[k - i].get_mpz_t());
        }
        // a[0] is its own inverse.
        if (negate) {
            mpz_neg(out[k].get_mpz_t(), acc.get_mpz_t());
        } else {
            out[k] = acc;
        }
    }
}

void mul_linear_factor(std::span<mpz_class> c, int sign, std::int64_t offset)
{
    const auto e = static_cast<std::size_t>(offset);
    for (std::size_t j = c.size(); j-- > e;) {
        if (sign > 0) {
            c[j] -= c[j - e];
        } else {
            c[j] += c[j - e];
        }
    }
}

std::int64_t quadratic_min(std::int64_t a, std::int64_t b)
{
    const std::int64_t x = floor_div(-b, 2 * a);
    return std::min(eval(a, b, x), eval(a, b, x + 1));
}

IntRange quadratic_below(std::int64_t a, std::int64_t b, std::int64_t bound)
{
    const __int128 disc = static_cast<__int128>(b) * b + static_cast<__int128>(4) * a * bound;
    if (disc < 0) {
        return {};
    }
    const auto root = static_cast<std::int64_t>(isqrt(disc));
    return {floor_div(-b - root - 1, 2 * a) - 1, ceil_div(-b + root + 1, 2 * a) + 1};
}

std::vector<std::int64_t> quad_form_counts_serial(const QuadForm& f, std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)), 0);
    const IntRange ms = row_range(f, hi);
    for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
        if (!accumulate_row(f, m, lo, hi, counts)) {
            below_window();
        }
    }
    return counts;
}

std::vector<std::int64_t> quad_form_counts_parallel(const QuadForm& f, std::int64_t lo, std::int64_t hi)
{
    const auto len = static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0));
    const IntRange ms = row_range(f, hi);
    std::vector<std::vector<std::int64_t>> partial(static_cast<std::size_t>(max_threads()));
    bool ok = true;
#pragma omp parallel reduction(&& : ok)
    {
        auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
        mine.assign(len, 0);
#pragma omp for schedule(static)
        for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
            ok = accumulate_row(f, m, lo, hi, mine) && ok;
        }
    }
    if (!ok) {
        below_window();
    }
    std::vector<std::int64_t> counts(len, 0);
    for (const auto& part : partial) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            counts[i] += part[i];
        }
    }
    return counts;
}

std::vector<std::int64_t> quad_form_counts(const QuadForm& f, std::int64_t lo, std::int64_t hi)
{
    if (hi - lo >= static_cast<std::int64_t>(parallel_threshold) && max_threads() > 1 && !omp_in_parallel()) {
        return quad_form_counts_parallel(f, lo, hi);
    }
    return quad_form_counts_serial(f, lo, hi);
}

} // namespace qseries::kernels
