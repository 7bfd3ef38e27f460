#pragma once

// The mod-2 cohomology ring of a finitely generated abelian group as
//   Sym(x_1..x_r in degree 1, y_1..y_s in degree 2) / (x_i^2 + beta~^v(x_i)),
// where beta~^v(x_i) = sum_j beta(i, j) y_j. Elements are kept in normal form:
// every x-exponent is 0 or 1, and squares are rewritten into the y's as soon
// as they appear.
//
// Monomial order (frozen): total y-degree ascending, then the y-exponent
// vector, then the x-exponent vector, both compared lexicographically with
// the larger exponent at the first difference coming first (so x1 precedes
// x2 and y1^2 precedes y1*y2). Filtration subspaces are therefore suffixes
// of each degree's basis.

#include "mod2cohom/fgabelian.hpp"
#include "mod2cohom/gf2linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mod2cohom {

struct Monomial {
    std::uint64_t eps = 0;             // bit i set <=> x_{i+1} divides
    std::vector<std::uint32_t> alpha;  // exponent of y_{j+1}

    std::size_t x_degree() const;
    std::size_t y_degree() const;  // sum of alpha, i.e. the filtration index
    std::size_t degree() const { return x_degree() + 2 * y_degree(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// The frozen monomial order.
bool operator<(const Monomial& a, const Monomial& b);

class RingElement {
public:
    RingElement() = default;
    explicit RingElement(Monomial m) { terms_.insert(std::move(m)); }

    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of a nonzero homogeneous element.
    std::size_t degree() const;

    // Adds m with coefficient 1 (so adding twice cancels).
    void toggle(const Monomial& m);
    RingElement& operator+=(const RingElement& other);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::set<Monomial> terms_;
};

class RingPresentation {
public:
    explicit RingPresentation(ModTwoTriple triple);

    std::size_t r() const { return triple_.r; }
    std::size_t s() const { return triple_.s; }
    const ModTwoTriple& triple() const { return triple_; }
    // Coefficient of y_j in x_i^2 (0-based).
    bool square_coefficient(std::size_t i, std::size_t j) const { return triple_.beta.get(i, j); }

    RingElement one() const;
    RingElement x(std::size_t i) const;  // 0-based
    RingElement y(std::size_t j) const;  // 0-based
    // x_i^2 rewritten in the y's.
    RingElement square_of_x(std::size_t i) const;

    std::string to_string() const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

private:
    ModTwoTriple triple_;
};

RingPresentation presentation(const FgAbGroup& a);

RingElement multiply(const RingPresentation& p, const RingElement& u, const RingElement& v);
RingElement power(const RingPresentation& p, const RingElement& u, std::size_t e);

std::vector<Monomial> basis(const RingPresentation& p, std::size_t n);
std::size_t dim_h(const RingPresentation& p, std::size_t n);

// Coordinates of a homogeneous degree-n element in basis(p, n).
gf2::BitVector coordinates(const RingPresentation& p, const RingElement& u, std::size_t n);

struct FiltrationReport {
    std::size_t n = 0;
    std::vector<std::size_t> phi_dims;       // dim Phi^i, i = 0..floor(n/2)+1
    std::vector<std::size_t> quotient_dims;  // dim Phi^i / Phi^(i+1)
};

// Phi^i in degree n is spanned by the monomials of y-degree >= i.
FiltrationReport filtration(const RingPresentation& p, std::size_t n);
// Smallest i with u in Phi^i (u homogeneous); the y-degree of the lowest term.
std::size_t filtration_level(const RingElement& u);

// Sq^k u, from the total square Sq(x) = x + x^2, Sq(y) = y + y^2 extended
// multiplicatively. Throws std::invalid_argument for non-homogeneous u.
RingElement sq(const RingPresentation& p, std::size_t k, const RingElement& u);

// Pullback along f : A -> B of an element of H*(B); source_ring and
// target_ring are the presentations of f.source() and f.target().
class InducedRingMap {
public:
    InducedRingMap(const GroupHom& f, RingPresentation source_ring, RingPresentation target_ring);

    RingElement operator()(const RingElement& u) const;
    const RingPresentation& source_ring() const { return source_; }
    const RingPresentation& target_ring() const { return target_; }

private:
    RingPresentation source_;
    RingPresentation target_;
    std::vector<RingElement> x_images_;
    std::vector<RingElement> y_images_;
};

RingElement induced_map(const GroupHom& f, const RingPresentation& source_ring, const RingPresentation& target_ring,
                        const RingElement& u);

// The map
//   sum_{2k+l+2m=n, k>=1} Sym^k(V) x Sym^l(V) x Sym^m(W)  -->  sum_{i+2j=n} Sym^i(V) x Sym^j(W)
//   a x b x c  |-->  F(a) b x c  +  b x Sym^k(beta~^v)(a) c
// with V = (A/2)^v, W = (2A)^v and F the Frobenius. Its cokernel is H^n.
struct SymTerm {
    std::vector<std::uint32_t> v;  // exponents on the degree-1 generators
    std::vector<std::uint32_t> w;  // exponents on the degree-2 generators
    friend bool operator==(const SymTerm&, const SymTerm&) = default;
};

struct CokernelSourceTerm {
    std::size_t k = 0, l = 0, m = 0;
    std::vector<std::uint32_t> a, b, c;
};

struct CokernelMap {
    std::size_t n = 0;
    gf2::Gf2Matrix matrix;  // target_dim x source_dim
    std::vector<CokernelSourceTerm> source;
    std::vector<SymTerm> target;
};

// Exponent vectors of length `vars` summing to `total`, x1-heaviest first.
std::vector<std::vector<std::uint32_t>> sym_basis(std::size_t vars, std::size_t total);
// Target basis: j = 0..n/2 ascending, then v, then w in sym_basis order.
std::vector<SymTerm> cokernel_target_basis(const RingPresentation& p, std::size_t n);

CokernelMap cokernel_map(const RingPresentation& p, std::size_t n);
std::size_t cokernel_dims(const RingPresentation& p, std::size_t n);

// The degree-2 and degree-3 relation maps written out directly:
//   x |-> (x^2, beta~^v(x))                  columns indexed by x_i
//   x (x) y |-> (x^2 y, y (x) beta~^v(x))    columns indexed by (i, j) -> i*r + j
// in the target basis of cokernel_target_basis(p, 2) and (p, 3).
gf2::Gf2Matrix explicit_h2_map(const RingPresentation& p);
gf2::Gf2Matrix explicit_h3_map(const RingPresentation& p);

// Rank of the squaring map H^1 -> H^2.
std::size_t squaring_rank(const RingPresentation& p);

struct WitnessReport {
    FgAbGroup a, b;
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims_a, dims_b;
    bool dims_equal = false;
    std::size_t square_rank_a = 0, square_rank_b = 0;
    // The ring is determined up to isomorphism by (r, s, rank beta~), since
    // changes of basis bring beta~ to a partial identity. H^1 and H^2 recover
    // r and s, so dims plus squaring rank decide isomorphism.
    bool isomorphic = false;

    std::string summary() const;
};

WitnessReport ring_isomorphism_witness(const FgAbGroup& a, const FgAbGroup& b, std::size_t max_degree);

// Text form: "x1*y2^3 + x2", "1" for the unit and "0" for zero.
std::string to_string(const Monomial& m);
std::string to_string(const RingElement& u);
// Inverse of to_string; products are reduced in p. Throws std::invalid_argument.
RingElement parse_element(const RingPresentation& p, const std::string& text);

}  // namespace mod2cohom
