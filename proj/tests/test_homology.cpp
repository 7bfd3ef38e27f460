#include "doctest.h"
#include "test_support.hpp"

#include "mod2cohom/homology.hpp"

using namespace mod2cohom;
using namespace testing_support;

namespace {

FgAbGroup g(const std::string& spec) { return parse_group_spec(spec); }

GradedDims ints(std::initializer_list<long> xs)
{
    GradedDims d;
    for (long x : xs)
        d.dims.emplace_back(x);
    return d;
}

}  // namespace

TEST_CASE("homology_dim examples")
{
    // H_2(Z/4; Z) = 0 and Tor(Z/4, Z/2) = Z/2 from H_1.
    CHECK(homology_dim(g("Z/4"), 2) == 1);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(homology_dim(g("Z/2"), n) == 1);
    CHECK(homology_dim(g("0"), 0) == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(homology_dim(g("0"), n) == 0);
}

TEST_CASE("homology of a free group is exterior")
{
    // H_n(Z^k; F2) = Lambda^n(F2^k).
    for (std::size_t k = 0; k <= 4; ++k)
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(Count(homology_dim(FgAbGroup::from_cyclic(k, {}), n)) == binomial(static_cast<long>(k), static_cast<long>(n)));
}

TEST_CASE("psi_filtration examples")
{
    CHECK(psi_filtration(g("Z/2 x Z/4"), 2).psi_quotient_dims == std::vector<std::size_t>{1, 2});
    for (int trial = 0; trial < 20; ++trial) {
        const FgAbGroup a = random_group(4);
        CHECK(psi_filtration(a, 1).psi_quotient_dims == std::vector<std::size_t>{mod_two_triple(a).r});
    }
    CHECK(psi_filtration(g("Z/4"), 5).psi_quotient_dims == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("homology and cohomology dimensions agree")
{
    for (int trial = 0; trial < 100; ++trial) {
        const FgAbGroup a = random_group(4);
        const auto p = presentation(a);
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto rep = psi_filtration(a, n);
            REQUIRE(rep.dim == dim_h(p, n));
            REQUIRE(rep.psi_quotient_dims == filtration(p, n).quotient_dims);
            // Nullity both ways: kernel basis size and cols - rank.
            const auto km = homology_kernel_map(p, n);
            REQUIRE(km.rows() == rep.kernel_matrix_shape.first);
            REQUIRE(km.cols() == rep.kernel_matrix_shape.second);
            REQUIRE(gf2::kernel_basis(km).rows() == km.cols() - gf2::rank(km));
            REQUIRE(rep.dim == km.cols() - gf2::rank(km));
        }
    }
}

TEST_CASE("h2 and h3 sequences: examples")
{
    const auto z2 = h2_h3_sequences(g("Z/2"));
    CHECK(z2.h2.middle_dim == 2);
    CHECK(z2.h2.right_dim == 1);
    CHECK(z2.h2.rank == 1);
    CHECK(z2.h2.kernel_dim == 1);
    CHECK(z2.h2.exact());

    const auto z = h2_h3_sequences(g("Z"));
    CHECK(z.h2.middle_dim == 1);
    CHECK(z.h2.right_dim == 1);
    CHECK(z.h2.kernel_dim == 0);
    CHECK(z.h2.homology_dim == 0);
    CHECK(z.h2.exact());

    const auto klein = h2_h3_sequences(g("Z/2 x Z/2"));
    CHECK(klein.h2.middle_dim == 5);
    CHECK(klein.h2.rank == 2);
    CHECK(klein.h2.kernel_dim == 3);
    CHECK(klein.h2.exact());
    CHECK(klein.h3.exact());
}

TEST_CASE("h2 and h3 sequences are exact on random groups")
{
    for (int trial = 0; trial < 150; ++trial) {
        const FgAbGroup a = random_group(4);
        const auto seq = h2_h3_sequences(a);
        const std::size_t r = mod_two_triple(a).r;
        REQUIRE(seq.h2.right_dim == r);
        REQUIRE(seq.h3.right_dim == r * r);
        REQUIRE(seq.h2.exact());
        REQUIRE(seq.h3.exact());
        REQUIRE(seq.h2.homology_dim == homology_dim(a, 2));
        REQUIRE(seq.h3.homology_dim == homology_dim(a, 3));
    }
}

TEST_CASE("Hopf short exact sequence at the level of series")
{
    const auto z2 = hopf_ses_dims(g("Z/2"), 6);
    CHECK(z2.holds);
    CHECK(z2.homology == ints({1, 1, 1, 1, 1, 1, 1}));

    const auto free2 = hopf_ses_dims(g("Z^2"), 4);
    CHECK(free2.holds);
    CHECK(free2.homology == ints({1, 2, 1, 0, 0}));

    const auto z82 = hopf_ses_dims(g("Z/8 x Z/2"), 5);
    CHECK(z82.holds);
    CHECK(z82.homology == ints({1, 2, 3, 4, 5, 6}));

    for (int trial = 0; trial < 50; ++trial)
        REQUIRE(hopf_ses_dims(random_group(4), 10).holds);
}
