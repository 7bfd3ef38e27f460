#pragma once

// Dimension counts for exterior, symmetric and divided-power functors, and
// Hilbert series computed by truncated power-series products.

#include "mod2cohom/fgabelian.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace mod2cohom {

using Count = mpz_class;

struct GradedDims {
    std::vector<Count> dims;  // dims[n] for n = 0..N

    std::size_t max_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

Count binomial(long n, long k);

// dim Lambda^k of an r-dimensional space.
Count lambda_dim(long r, long k);
// dim Sym^i (equivalently Gamma^i) of an s-dimensional space.
Count sym_dim(long s, long i);

// dims[n] = sum_i lambda_dim(r, n - 2i) * sym_dim(s, i).
GradedDims predicted_dims(const ModTwoTriple& triple, std::size_t max_degree);

// Coefficients of (1 + t)^free_rank * (1 - t)^-(number of even factors),
// expanded by repeated series multiplication.
GradedDims hilbert_series_oracle(const FgAbGroup& a, std::size_t max_degree);

// Truncated product of two series, to the shorter length.
GradedDims convolve(const GradedDims& a, const GradedDims& b);

// Coefficients of (1 + t)^r / (1 - t^2)^s up to max_degree.
GradedDims exterior_times_divided_series(std::size_t r, std::size_t s, std::size_t max_degree);

}  // namespace mod2cohom
