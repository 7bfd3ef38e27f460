#pragma once

// Brute-force ground truth: the inhomogeneous bar cochain complex of a finite
// abelian group with F2 coefficients, Alexander-Whitney cup products and the
// Bockstein of Z/2 -> Z/4 -> Z/2.
//
// Group elements are residue tuples indexed mixed-radix with the leftmost
// cyclic factor fastest; n-tuples (g1, ..., gn) are indexed the same way with
// g1 fastest. A degree-n cochain is a bit vector of length |G|^n.

#include "mod2cohom/cohomring.hpp"
#include "mod2cohom/fgabelian.hpp"
#include "mod2cohom/gf2linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mod2cohom {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BarOptions {
    std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

class FiniteGroup {
public:
    // Throws std::invalid_argument if any order is < 2.
    explicit FiniteGroup(std::vector<std::int64_t> orders);
    // Cyclic factors of a finite group in canonical form. Throws
    // std::invalid_argument for groups with free part.
    static FiniteGroup from(const FgAbGroup& a);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t order() const { return order_; }
    std::int64_t component(std::size_t element, std::size_t factor) const;
    std::size_t add(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    std::size_t negate(std::size_t a) const { return neg_[a]; }
    // |G|^n; throws ResourceError if it overflows.
    std::size_t tuple_count(std::size_t n) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.orders_ == b.orders_; }

private:
    std::vector<std::int64_t> orders_;
    std::size_t order_ = 1;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> neg_;
};

struct BarCochain {
    std::vector<std::int64_t> group;  // cyclic orders of the group it lives on
    std::size_t degree = 0;
    gf2::BitVector values;

    friend bool operator==(const BarCochain&, const BarCochain&) = default;
};

BarCochain zero_cochain(const FiniteGroup& g, std::size_t degree);
BarCochain unit_cochain(const FiniteGroup& g);

BarCochain differential(const FiniteGroup& g, const BarCochain& f);
// Throws std::invalid_argument if f and h live on different groups.
BarCochain cup(const BarCochain& f, const BarCochain& h);

// d_n^T: row t is d(delta_t) for the n-tuple t; shape |G|^n x |G|^(n+1).
// Throws ResourceError when the dense matrix would exceed the budget.
gf2::Gf2Matrix coboundary_rows(const FiniteGroup& g, std::size_t n, const BarOptions& opts = {});

// Caches differential matrices and their ranks for one group.
class BarComplex {
public:
    explicit BarComplex(FiniteGroup g, BarOptions opts = {}) : group_(std::move(g)), opts_(opts) {}

    const FiniteGroup& group() const { return group_; }

    // d_n : C^n -> C^(n+1), shape |G|^(n+1) x |G|^n.
    gf2::Gf2Matrix differential_matrix(std::size_t n);
    std::size_t differential_rank(std::size_t n);
    std::size_t cohomology_dim(std::size_t n);
    // f of degree n is d of some (n-1)-cochain.
    bool is_coboundary(const BarCochain& f);
    bool is_cocycle(const BarCochain& f) const;
    // Subspace of n-cochains spanned by coboundaries.
    gf2::EchelonBasis coboundary_span(std::size_t n);

private:
    const gf2::Gf2Matrix& rows(std::size_t n);

    FiniteGroup group_;
    BarOptions opts_;
    std::map<std::size_t, gf2::Gf2Matrix> rows_;
    std::map<std::size_t, std::size_t> ranks_;
};

std::size_t cohomology_dim(const FiniteGroup& g, std::size_t n, const BarOptions& opts = {});

struct CanonicalCocycles {
    std::vector<BarCochain> x;  // characters a |-> a_i mod 2, one per even factor
    std::vector<BarCochain> y;  // carry cocycles floor((a_i + b_i) / m_i) mod 2
};

CanonicalCocycles canonical_cocycles(const FiniteGroup& g);

// Cocycle for a ring element: each monomial becomes the cup product of its
// x representatives (ascending) and then its y representatives.
BarCochain realize(const FiniteGroup& g, const CanonicalCocycles& reps, const RingElement& u, std::size_t degree);

struct RelationCheck {
    std::size_t index = 0;  // x_(index+1)
    bool coboundary = false;
};

struct SpanCheck {
    std::size_t degree = 0;
    std::size_t ring_dim = 0;
    std::size_t bar_dim = 0;
    std::size_t span_dim = 0;  // rank of the monomial classes mod coboundaries
    bool cocycles = false;
    bool ok() const { return cocycles && span_dim == ring_dim && bar_dim == ring_dim; }
};

struct RelationCertificate {
    bool independent_generators = false;  // x and y classes independent in H^1, H^2
    std::vector<RelationCheck> relations;
    std::vector<SpanCheck> spans;
    bool passed() const;
};

// x_i cup x_i + beta~^v(x_i) is a coboundary for every i, and monomials in
// the representatives span H^n for n <= max_degree. Throws
// std::invalid_argument for infinite groups and ResourceError over budget.
RelationCertificate verify_relations(const FgAbGroup& a, std::size_t max_degree, const BarOptions& opts = {});

// Lift f to Z/4 values {0, 1}, take the integral coboundary mod 4 and halve.
// Throws std::invalid_argument if f is not a cocycle.
BarCochain bockstein_oracle(const FiniteGroup& g, const BarCochain& f);

// Bockstein of the representative of u agrees with the representative of
// Sq^1 u modulo coboundaries.
bool bockstein_matches_sq1(BarComplex& complex, const RingPresentation& p, const CanonicalCocycles& reps,
                           const RingElement& u);

}  // namespace mod2cohom
