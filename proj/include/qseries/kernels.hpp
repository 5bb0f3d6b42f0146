#pragma once

// Hot loops of the engine. Every kernel exists in a serial reference form
// and an OpenMP form; the two must produce identical output for identical
// input. Series arithmetic calls the dispatching entry points, tests and
// the benchmark call the explicit variants.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qseries::kernels {

// out[k] = sum_{i+j=k} a[i] * b[j] over valid i, j, for k < out.size().
void convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out);
void convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out);
void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out);

// Power-series reciprocal of a with a[0] = +-1, written to out[0 .. out.size()).
// out.size() must not exceed a.size(). Each term depends on all earlier
// ones, so there is no parallel variant.
void reciprocal(std::span<const mpz_class> a, std::span<mpz_class> out);

// Multiplies c in place by (1 - sign * q^offset), offset >= 1.
void mul_linear_factor(std::span<mpz_class> c, int sign, std::int64_t offset);

// Parameters of sum_{m,n} eps^(m+n) q^(shift + A m^2 + B m + C n^2 + D n).
struct QuadForm {
    int eps = 1;
    std::int64_t a = 1, b = 0, c = 1, d = 0;
    std::int64_t shift = 0;
};

// Lattice-point counts for a quadratic form: entry i holds the signed count
// of (m, n) whose exponent equals lo + i, for exponents in [lo, hi).
// Requires a >= 1 and c >= 1.
std::vector<std::int64_t> quad_form_counts_serial(const QuadForm& f, std::int64_t lo, std::int64_t hi);
std::vector<std::int64_t> quad_form_counts_parallel(const QuadForm& f, std::int64_t lo, std::int64_t hi);
std::vector<std::int64_t> quad_form_counts(const QuadForm& f, std::int64_t lo, std::int64_t hi);

// Minimum over integers x of a*x^2 + b*x (a >= 1).
std::int64_t quadratic_min(std::int64_t a, std::int64_t b);

// Inclusive integer interval containing every x with a*x^2 + b*x < bound
// (a >= 1), widened by one on each side; empty (lo > hi) if none exist.
// Callers filter candidates against the exact inequality.
struct IntRange {
    std::int64_t lo = 0, hi = -1;
};
IntRange quadratic_below(std::int64_t a, std::int64_t b, std::int64_t bound);

// Outputs smaller than this go to the serial kernel from the dispatcher.
inline constexpr std::size_t parallel_threshold = 256;

// Number of threads the parallel kernels will use.
int max_threads();

} // namespace qseries::kernels
