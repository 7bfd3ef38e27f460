#include "doctest.h"
#include "test_support.hpp"

#include "mod2cohom/gradedalg.hpp"

using namespace mod2cohom;
using namespace testing_support;

namespace {

// Counts k-subsets of an r-set by walking all bitmasks.
long count_subsets(unsigned r, unsigned k)
{
    long n = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask)
        n += std::popcount(mask) == static_cast<int>(k);
    return n;
}

// Counts multisets of size i from s kinds by recursion.
long count_multisets(long s, long i)
{
    if (i == 0)
        return 1;
    if (s == 0)
        return 0;
    long n = 0;
    for (long take = 0; take <= i; ++take)
        n += count_multisets(s - 1, i - take);
    return n;
}

GradedDims ints(std::initializer_list<long> xs)
{
    GradedDims g;
    for (long x : xs)
        g.dims.emplace_back(x);
    return g;
}

}  // namespace

TEST_CASE("lambda_dim")
{
    CHECK(lambda_dim(2, 2) == 1);
    CHECK(lambda_dim(2, 3) == 0);
    CHECK(lambda_dim(5, 2) == 10);
    CHECK(lambda_dim(3, -1) == 0);
    for (unsigned r = 0; r <= 10; ++r)
        for (unsigned k = 0; k <= 12; ++k)
            REQUIRE(lambda_dim(r, k) == count_subsets(r, k));
}

TEST_CASE("sym_dim")
{
    for (long i = 0; i < 10; ++i)
        CHECK(sym_dim(1, i) == 1);
    CHECK(sym_dim(2, 1) == 2);
    CHECK(sym_dim(3, 4) == 15);
    CHECK(sym_dim(0, 0) == 1);
    CHECK(sym_dim(0, 3) == 0);
    for (long s = 0; s <= 6; ++s)
        for (long i = 0; i <= 7; ++i)
            REQUIRE(sym_dim(s, i) == count_multisets(s, i));
}

TEST_CASE("predicted_dims examples")
{
    const auto z2 = predicted_dims(mod_two_triple(parse_group_spec("Z/2")), 10);
    const auto z4 = predicted_dims(mod_two_triple(parse_group_spec("Z/4")), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(z2.dims[n] == 1);
        CHECK(z4.dims[n] == 1);
    }
    const auto z24 = predicted_dims(mod_two_triple(parse_group_spec("Z/2 x Z/4")), 3);
    CHECK(z24.dims[2] == 3);
    CHECK(z24.dims[3] == 4);
}

TEST_CASE("predicted_dims depends only on r and s")
{
    ModTwoTriple t = mod_two_triple(parse_group_spec("Z/2 x Z/6 x Z"));
    const auto before = predicted_dims(t, 12);
    t.beta = gf2::Gf2Matrix(t.r, t.s);
    CHECK(predicted_dims(t, 12) == before);
}

TEST_CASE("hilbert_series_oracle examples")
{
    CHECK(hilbert_series_oracle(parse_group_spec("Z"), 4) == ints({1, 1, 0, 0, 0}));
    CHECK(hilbert_series_oracle(parse_group_spec("Z/3"), 4) == ints({1, 0, 0, 0, 0}));
    CHECK(hilbert_series_oracle(parse_group_spec("Z^2 x Z/2"), 3) == ints({1, 3, 4, 4}));
}

TEST_CASE("predicted_dims equals the Hilbert series on 200 random groups")
{
    for (int trial = 0; trial < 200; ++trial) {
        const FgAbGroup a = random_group(5);
        REQUIRE(predicted_dims(mod_two_triple(a), 12) == hilbert_series_oracle(a, 12));
    }
}

TEST_CASE("predicted_dims of a direct sum is the convolution")
{
    for (int trial = 0; trial < 200; ++trial) {
        const FgAbGroup a = random_group(3);
        const FgAbGroup b = random_group(3);
        const auto pa = predicted_dims(mod_two_triple(a), 10);
        const auto pb = predicted_dims(mod_two_triple(b), 10);
        REQUIRE(predicted_dims(mod_two_triple(direct_sum(a, b)), 10) == convolve(pa, pb));
    }
}

TEST_CASE("exterior times divided series")
{
    CHECK(exterior_times_divided_series(1, 1, 6) == ints({1, 1, 1, 1, 1, 1, 1}));
    CHECK(exterior_times_divided_series(2, 0, 4) == ints({1, 2, 1, 0, 0}));
    CHECK(exterior_times_divided_series(2, 2, 5) == ints({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("counts stay exact beyond 64 bits")
{
    // C(100, 50) = 100891344545564193334812497256
    CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));
    CHECK(sym_dim(60, 40) == binomial(99, 40));
}
