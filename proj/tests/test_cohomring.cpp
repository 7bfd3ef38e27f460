#include "doctest.h"
#include "test_support.hpp"

#include "mod2cohom/gradedalg.hpp"

using namespace mod2cohom;
using namespace testing_support;

namespace {

RingPresentation ring_of(const std::string& spec) { return presentation(parse_group_spec(spec)); }

RingElement parse(const RingPresentation& p, const std::string& s) { return parse_element(p, s); }

RingElement random_element(const RingPresentation& p, std::size_t max_degree)
{
    RingElement u;
    for (std::size_t n = 0; n <= max_degree; ++n)
        u += random_homogeneous(p, n);
    return u;
}

RingElement component(const RingElement& u, std::size_t degree)
{
    RingElement out;
    for (const auto& m : u.terms())
        if (m.degree() == degree)
            out.toggle(m);
    return out;
}

// C(a, t) is odd iff the binary digits of t are a subset of those of a.
bool binomial_is_odd(std::size_t a, std::size_t t) { return (t & ~a) == 0; }

}  // namespace

TEST_CASE("presentation of cyclic groups")
{
    const auto z2 = ring_of("Z/2");
    CHECK(z2.r() == 1);
    CHECK(z2.s() == 1);
    CHECK(z2.square_of_x(0) == z2.y(0));
    CHECK(z2.to_string() == "F2[x1, y1] / (x1^2 + y1)");

    const auto z8 = ring_of("Z/8");
    CHECK(z8.square_of_x(0).is_zero());
    CHECK(z8.to_string() == "F2[x1, y1] / (x1^2)");

    const auto z = ring_of("Z");
    CHECK(z.r() == 1);
    CHECK(z.s() == 0);
    CHECK(z.square_of_x(0).is_zero());

    CHECK_THROWS_AS(RingPresentation(ModTwoTriple{65, 0, gf2::Gf2Matrix(65, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(RingPresentation(ModTwoTriple{1, 1, gf2::Gf2Matrix(1, 2)}), std::invalid_argument);
}

TEST_CASE("multiply examples")
{
    const auto z2 = ring_of("Z/2");
    CHECK(multiply(z2, z2.x(0), z2.x(0)) == z2.y(0));

    const auto z4 = ring_of("Z/4");
    CHECK(multiply(z4, z4.x(0), z4.x(0)).is_zero());

    const auto p = ring_of("Z/2 x Z/4");
    const RingElement s = p.x(0) + p.x(1);
    CHECK(multiply(p, s, s) == p.y(0));
}

TEST_CASE("ring axioms on 1000 random triples")
{
    for (int trial = 0; trial < 1000; ++trial) {
        const RingPresentation p(random_triple(3, 3));
        const RingElement u = random_element(p, uniform(0, 4));
        const RingElement v = random_element(p, uniform(0, 4));
        const RingElement w = random_element(p, uniform(0, 3));
        REQUIRE(multiply(p, multiply(p, u, v), w) == multiply(p, u, multiply(p, v, w)));
        REQUIRE(multiply(p, u, v) == multiply(p, v, u));
        REQUIRE(multiply(p, p.one(), u) == u);
        REQUIRE(multiply(p, u, v + w) == multiply(p, u, v) + multiply(p, u, w));
    }
}

TEST_CASE("squares of degree-one elements follow the relation")
{
    for (int trial = 0; trial < 200; ++trial) {
        const RingPresentation p(random_triple(5, 4));
        const RingElement u = random_homogeneous(p, 1);
        // (sum x_i)^2 = sum x_i^2 in characteristic 2.
        RingElement expect;
        for (const auto& m : u.terms())
            for (std::size_t i = 0; i < p.r(); ++i)
                if (m.eps >> i & 1)
                    expect += p.square_of_x(i);
        REQUIRE(multiply(p, u, u) == expect);
        for (std::size_t i = 0; i < p.r(); ++i) {
            RingElement beta_x;
            for (std::size_t j = 0; j < p.s(); ++j)
                if (p.square_coefficient(i, j))
                    beta_x += p.y(j);
            REQUIRE(p.square_of_x(i) == beta_x);
        }
    }
}

TEST_CASE("dim_h examples")
{
    const auto z2 = ring_of("Z/2");
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(dim_h(z2, n) == 1);
    CHECK(dim_h(ring_of("Z/2 x Z/4"), 3) == 4);
    const auto trivial = ring_of("0");
    CHECK(dim_h(trivial, 0) == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(dim_h(trivial, n) == 0);
}

TEST_CASE("basis examples")
{
    const auto z2 = ring_of("Z/2");
    const auto b3 = basis(z2, 3);
    REQUIRE(b3.size() == 1);
    CHECK(to_string(b3[0]) == "x1*y1");

    const auto b2 = basis(ring_of("Z/4"), 2);
    REQUIRE(b2.size() == 1);
    CHECK(to_string(b2[0]) == "y1");

    const RingPresentation ext(ModTwoTriple{2, 0, gf2::Gf2Matrix(2, 0)});
    const auto e2 = basis(ext, 2);
    REQUIRE(e2.size() == 1);
    CHECK(to_string(e2[0]) == "x1*x2");
}

TEST_CASE("basis is sorted, distinct and of the right degree")
{
    for (int trial = 0; trial < 100; ++trial) {
        const RingPresentation p(random_triple(4, 3));
        for (std::size_t n = 0; n <= 7; ++n) {
            const auto b = basis(p, n);
            REQUIRE(b.size() == predicted_dims(p.triple(), n).dims[n]);
            for (std::size_t i = 0; i < b.size(); ++i) {
                REQUIRE(b[i].degree() == n);
                if (i > 0)
                    REQUIRE(b[i - 1] < b[i]);
            }
        }
    }
}

TEST_CASE("frozen monomial order")
{
    const auto p = ring_of("Z/2 x Z/4");
    const auto b4 = basis(p, 4);
    std::vector<std::string> names;
    for (const auto& m : b4)
        names.push_back(to_string(m));
    CHECK(names == std::vector<std::string>{"x1*x2*y1", "x1*x2*y2", "y1^2", "y1*y2", "y2^2"});
}

TEST_CASE("coordinates")
{
    const auto p = ring_of("Z/2 x Z/4");
    const RingElement u = parse(p, "x1*x2*y2 + y2^2");
    const auto c = coordinates(p, u, 4);
    CHECK(c.to_string() == "01001");
    CHECK_THROWS(coordinates(p, p.x(0), 2));
}

TEST_CASE("filtration examples")
{
    const auto r24 = filtration(ring_of("Z/2 x Z/4"), 2);
    CHECK(r24.quotient_dims == std::vector<std::size_t>{1, 2});
    CHECK(r24.phi_dims.front() == 3);
    CHECK(r24.phi_dims.back() == 0);

    const auto any = filtration(ring_of("Z^2 x Z/6"), 0);
    CHECK(any.quotient_dims == std::vector<std::size_t>{1});

    const auto z4 = filtration(ring_of("Z/4"), 4);
    CHECK(z4.quotient_dims == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("filtration quotients are binomial products and sum to the dimension")
{
    for (int trial = 0; trial < 100; ++trial) {
        const FgAbGroup a = random_group(4);
        const auto p = presentation(a);
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto rep = filtration(p, n);
            std::size_t total = 0;
            for (std::size_t i = 0; 2 * i <= n; ++i) {
                // C(s+i-1, i) counts degree-i monomials in s variables; for s = 0
                // only i = 0 contributes.
                const Count multisets = i == 0 ? Count(1) : binomial(static_cast<long>(p.s() + i) - 1, static_cast<long>(i));
                const Count expect = binomial(static_cast<long>(p.r()), static_cast<long>(n - 2 * i)) * multisets;
                REQUIRE(Count(rep.quotient_dims[i]) == expect);
                total += rep.quotient_dims[i];
            }
            REQUIRE(total == dim_h(p, n));
        }
    }
}

TEST_CASE("filtration is multiplicative")
{
    for (int trial = 0; trial < 1000; ++trial) {
        const RingPresentation p(random_triple(3, 3));
        const RingElement u = random_homogeneous(p, uniform(0, 5));
        const RingElement v = random_homogeneous(p, uniform(0, 5));
        if (u.is_zero() || v.is_zero())
            continue;
        const RingElement uv = multiply(p, u, v);
        if (uv.is_zero())
            continue;
        REQUIRE(filtration_level(uv) >= filtration_level(u) + filtration_level(v));
    }
}

TEST_CASE("sq examples")
{
    const auto z4 = ring_of("Z/4");
    CHECK(sq(z4, 1, z4.x(0)).is_zero());
    const auto z2 = ring_of("Z/2");
    CHECK(sq(z2, 1, z2.x(0)) == z2.y(0));
    const auto p = ring_of("Z x Z/2 x Z/4 x Z/12");
    for (std::size_t j = 0; j < p.s(); ++j) {
        CHECK(sq(p, 2, p.y(j)) == multiply(p, p.y(j), p.y(j)));
        CHECK(sq(p, 1, p.y(j)).is_zero());
    }
    CHECK_THROWS_AS(sq(z2, 1, z2.one() + z2.x(0)), std::invalid_argument);
}

TEST_CASE("sq on powers of y follows the binomial rule")
{
    const auto z4 = ring_of("Z/4");
    for (std::size_t a = 0; a <= 12; ++a)
        for (std::size_t t = 0; t <= a + 1; ++t) {
            const RingElement ya = power(z4, z4.y(0), a);
            const RingElement expect = binomial_is_odd(a, t) && t <= a ? power(z4, z4.y(0), a + t) : RingElement{};
            REQUIRE(sq(z4, 2 * t, ya) == expect);
            REQUIRE(sq(z4, 2 * t + 1, ya).is_zero());
        }
}

TEST_CASE("unstable axioms, Cartan formula and Sq^1 on random elements")
{
    for (int trial = 0; trial < 300; ++trial) {
        const RingPresentation p(random_triple(3, 3));
        const std::size_t du = uniform(0, 5);
        const std::size_t dv = uniform(0, 4);
        const RingElement u = random_homogeneous(p, du);
        const RingElement v = random_homogeneous(p, dv);

        REQUIRE(sq(p, 0, u) == u);
        REQUIRE(sq(p, du, u) == multiply(p, u, u));
        for (std::size_t k = du + 1; k <= du + 3; ++k)
            REQUIRE(sq(p, k, u).is_zero());

        const RingElement uv = multiply(p, u, v);
        for (std::size_t k = 0; k <= du + dv; ++k) {
            RingElement cartan;
            for (std::size_t i = 0; i <= k; ++i)
                cartan += multiply(p, sq(p, i, u), sq(p, k - i, v));
            REQUIRE(sq(p, k, uv) == cartan);
        }

        REQUIRE(sq(p, 1, uv) == multiply(p, sq(p, 1, u), v) + multiply(p, u, sq(p, 1, v)));
        REQUIRE(sq(p, 1, sq(p, 1, u)).is_zero());
        for (std::size_t j = 0; j < p.s(); ++j)
            REQUIRE(sq(p, 1, p.y(j)).is_zero());
    }
}

TEST_CASE("Adem relation Sq^1 Sq^2 = Sq^3 on random elements")
{
    for (int trial = 0; trial < 200; ++trial) {
        const RingPresentation p(random_triple(3, 3));
        const RingElement u = random_homogeneous(p, uniform(0, 5));
        REQUIRE(sq(p, 1, sq(p, 2, u)) == sq(p, 3, u));
    }
}

TEST_CASE("induced map examples")
{
    const FgAbGroup z2 = parse_group_spec("Z/2");
    const FgAbGroup z4 = parse_group_spec("Z/4");
    const FgAbGroup z = parse_group_spec("Z");
    const auto p2 = presentation(z2);
    const auto p4 = presentation(z4);
    const auto pz = presentation(z);

    const FgAbGroup a = parse_group_spec("Z x Z/2 x Z/4");
    const auto pa = presentation(a);
    const InducedRingMap id(GroupHom::identity(a), pa, pa);
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& m : basis(pa, n))
            CHECK(id(RingElement(m)) == RingElement(m));

    const GroupHom incl(z2, z4, {{2}});
    const InducedRingMap f(incl, p2, p4);
    CHECK(f(p4.x(0)).is_zero());
    for (std::size_t e = 0; e <= 6; ++e)
        CHECK(f(power(p4, p4.y(0), e)) == power(p2, p2.y(0), e));

    const GroupHom proj(z, z2, {{1}});
    const InducedRingMap g(proj, pz, p2);
    CHECK(g(p2.x(0)) == pz.x(0));
    CHECK(g(p2.y(0)).is_zero());
    CHECK(g(multiply(p2, p2.x(0), p2.x(0))) == multiply(pz, pz.x(0), pz.x(0)));
    CHECK(induced_map(proj, pz, p2, p2.x(0)) == pz.x(0));
}

TEST_CASE("induced maps are ring homomorphisms and compose contravariantly")
{
    for (int trial = 0; trial < 200; ++trial) {
        const FgAbGroup a = random_group(3);
        const FgAbGroup b = random_group(3);
        const FgAbGroup c = random_group(3);
        const GroupHom f = random_hom(a, b);
        const GroupHom g = random_hom(b, c);
        const auto pa = presentation(a), pb = presentation(b), pc = presentation(c);
        const InducedRingMap fs(f, pa, pb), gs(g, pb, pc), gfs(compose(g, f), pa, pc);
        const RingElement u = random_homogeneous(pc, uniform(0, 4));
        const RingElement v = random_homogeneous(pc, uniform(0, 4));
        REQUIRE(gfs(u) == fs(gs(u)));
        REQUIRE(gs(multiply(pc, u, v)) == multiply(pb, gs(u), gs(v)));
        REQUIRE(gs(u + v) == gs(u) + gs(v));
        REQUIRE(gs(pc.one()) == pb.one());
        // Steenrod squares are natural.
        REQUIRE(gs(sq(pc, 1, u)) == sq(pb, 1, gs(u)));
        REQUIRE(gs(sq(pc, 2, u)) == sq(pb, 2, gs(u)));
    }
}

TEST_CASE("sym_basis ordering")
{
    const auto b = sym_basis(2, 2);
    CHECK(b == std::vector<std::vector<std::uint32_t>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(sym_basis(0, 0).size() == 1);
    CHECK(sym_basis(0, 1).empty());
    CHECK(sym_basis(3, 4).size() == 15);
}

TEST_CASE("cokernel examples")
{
    const auto p = ring_of("Z/2 x Z/4");
    const CokernelMap cm = cokernel_map(p, 2);
    CHECK(cm.source.size() == 2);
    CHECK(cm.target.size() == 5);
    CHECK(gf2::rank(cm.matrix) == 2);
    CHECK(cokernel_dims(p, 2) == 3);
    CHECK(cokernel_dims(p, 2) == dim_h(p, 2));

    CHECK(cokernel_dims(ring_of("Z"), 2) == 0);

    for (int trial = 0; trial < 20; ++trial) {
        const RingPresentation q(random_triple(4, 3));
        CHECK(cokernel_dims(q, 0) == 1);
        CHECK(cokernel_dims(q, 1) == q.r());
    }
}

TEST_CASE("cokernel dimensions agree with the ring")
{
    for (int trial = 0; trial < 100; ++trial) {
        const FgAbGroup a = random_group(4);
        const auto p = presentation(a);
        const auto pred = predicted_dims(p.triple(), 7);
        for (std::size_t n = 0; n <= 7; ++n) {
            REQUIRE(cokernel_dims(p, n) == dim_h(p, n));
            REQUIRE(Count(dim_h(p, n)) == pred.dims[n]);
        }
    }
}

TEST_CASE("explicit H^2 and H^3 maps match the degree-one components")
{
    for (int trial = 0; trial < 50; ++trial) {
        const RingPresentation p(random_triple(4, 4));
        CHECK(cokernel_map(p, 2).matrix == explicit_h2_map(p));
        CHECK(cokernel_map(p, 3).matrix == explicit_h3_map(p));
    }
}

TEST_CASE("witness")
{
    const auto w = ring_isomorphism_witness(parse_group_spec("Z/2"), parse_group_spec("Z/4"), 10);
    CHECK(w.dims_equal);
    CHECK(w.square_rank_a == 1);
    CHECK(w.square_rank_b == 0);
    CHECK_FALSE(w.isomorphic);
    CHECK(w.summary() == "dims equal; squaring rank 1 vs 0; rings NOT isomorphic");

    const FgAbGroup a = parse_group_spec("Z x Z/6");
    const auto same = ring_isomorphism_witness(a, a, 6);
    CHECK(same.isomorphic);
    CHECK(same.dims_a == same.dims_b);

    const auto swapped = ring_isomorphism_witness(parse_group_spec("Z/2 x Z/4"), parse_group_spec("Z/4 x Z/2"), 6);
    CHECK(swapped.isomorphic);
    CHECK(swapped.square_rank_a == swapped.square_rank_b);

    const auto diff = ring_isomorphism_witness(parse_group_spec("Z/2"), parse_group_spec("Z"), 4);
    CHECK_FALSE(diff.dims_equal);
    CHECK_FALSE(diff.isomorphic);
}

TEST_CASE("text form round-trips")
{
    const auto p = ring_of("Z x Z/2 x Z/4");
    CHECK(to_string(p.one()) == "1");
    CHECK(to_string(RingElement{}) == "0");
    CHECK(to_string(parse(p, "x2*y2^3 + x1")) == "x1 + x2*y2^3");
    CHECK(parse(p, "x1^2") == p.y(0));
    CHECK(parse(p, "0").is_zero());
    CHECK(parse(p, "x1 + x1").is_zero());
    CHECK_THROWS_AS(parse(p, "x4"), std::invalid_argument);
    CHECK_THROWS_AS(parse(p, "x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse(p, "2*x1"), std::invalid_argument);
    for (int trial = 0; trial < 200; ++trial) {
        const RingPresentation q(random_triple(4, 3));
        const RingElement u = random_element(q, 6);
        REQUIRE(parse(q, to_string(u)) == u);
        REQUIRE(component(u, 3) == component(parse(q, to_string(u)), 3));
    }
}
