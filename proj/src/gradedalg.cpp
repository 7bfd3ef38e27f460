#include "mod2cohom/gradedalg.hpp"

#include <algorithm>

namespace mod2cohom {

Count binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Count c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: c is C(n-k+i, i) here
    }
    return c;
}

Count lambda_dim(long r, long k) { return binomial(r, k); }

Count sym_dim(long s, long i)
{
    if (i < 0)
        return 0;
    if (s == 0)
        return i == 0 ? 1 : 0;
    return binomial(s + i - 1, i);
}

GradedDims predicted_dims(const ModTwoTriple& triple, std::size_t max_degree)
{
    GradedDims out;
    out.dims.resize(max_degree + 1);
    const long r = static_cast<long>(triple.r);
    const long s = static_cast<long>(triple.s);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        Count total = 0;
        for (long i = 0; 2 * i <= static_cast<long>(n); ++i)
            total += lambda_dim(r, static_cast<long>(n) - 2 * i) * sym_dim(s, i);
        out.dims[n] = total;
    }
    return out;
}

namespace {

GradedDims one(std::size_t max_degree)
{
    GradedDims g;
    g.dims.assign(max_degree + 1, 0);
    g.dims[0] = 1;
    return g;
}

// Multiply in place by (1 + t^step).
void times_one_plus(GradedDims& g, std::size_t step)
{
    for (std::size_t n = g.dims.size(); n-- > step;)
        g.dims[n] += g.dims[n - step];
}

// Multiply in place by 1 / (1 - t^step) = 1 + t^step + t^(2 step) + ...
void times_geometric(GradedDims& g, std::size_t step)
{
    for (std::size_t n = step; n < g.dims.size(); ++n)
        g.dims[n] += g.dims[n - step];
}

}  // namespace

GradedDims hilbert_series_oracle(const FgAbGroup& a, std::size_t max_degree)
{
    GradedDims g = one(max_degree);
    for (std::size_t i = 0; i < a.free_rank(); ++i)
        times_one_plus(g, 1);
    for (std::size_t i = 0; i < a.even_factor_count(); ++i)
        times_geometric(g, 1);
    return g;
}

GradedDims convolve(const GradedDims& a, const GradedDims& b)
{
    const std::size_t len = std::min(a.dims.size(), b.dims.size());
    GradedDims out;
    out.dims.assign(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j)
            out.dims[i + j] += a.dims[i] * b.dims[j];
    return out;
}

GradedDims exterior_times_divided_series(std::size_t r, std::size_t s, std::size_t max_degree)
{
    GradedDims g = one(max_degree);
    for (std::size_t i = 0; i < r; ++i)
        times_one_plus(g, 1);
    for (std::size_t i = 0; i < s; ++i)
        times_geometric(g, 2);
    return g;
}

}  // namespace mod2cohom
