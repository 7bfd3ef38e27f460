#include "mod2cohom/cohomring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mod2cohom {

namespace {

using Exponents = std::vector<std::uint32_t>;

// x1-heaviest lexicographic comparison: true when a comes first.
bool heavier_first(const Exponents& a, const Exponents& b)
{
    for (std::size_t j = 0; j < a.size() && j < b.size(); ++j)
        if (a[j] != b[j])
            return a[j] > b[j];
    return a.size() < b.size();
}

void toggle(std::set<Exponents>& s, const Exponents& e)
{
    auto [it, inserted] = s.insert(e);
    if (!inserted)
        s.erase(it);
}

// Choose `count` of the first `vars` bits, lowest indices first.
void combinations(std::size_t vars, std::size_t count, std::size_t start, std::uint64_t mask,
                  std::vector<std::uint64_t>& out)
{
    if (count == 0) {
        out.push_back(mask);
        return;
    }
    for (std::size_t i = start; i + count <= vars; ++i)
        combinations(vars, count - 1, i + 1, mask | (std::uint64_t{1} << i), out);
}

void sym_basis_rec(std::size_t vars, std::size_t total, Exponents& cur, std::vector<Exponents>& out)
{
    const std::size_t pos = cur.size();
    if (pos + 1 == vars) {
        cur.push_back(static_cast<std::uint32_t>(total));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t e = total + 1; e-- > 0;) {
        cur.push_back(static_cast<std::uint32_t>(e));
        sym_basis_rec(vars, total - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomials and elements

std::size_t Monomial::x_degree() const { return static_cast<std::size_t>(std::popcount(eps)); }

std::size_t Monomial::y_degree() const { return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0}); }

bool operator<(const Monomial& a, const Monomial& b)
{
    const std::size_t ya = a.y_degree();
    const std::size_t yb = b.y_degree();
    if (ya != yb)
        return ya < yb;
    if (a.alpha != b.alpha)
        return heavier_first(a.alpha, b.alpha);
    const std::uint64_t diff = a.eps ^ b.eps;
    if (diff == 0)
        return false;
    return (a.eps & (diff & (~diff + 1))) != 0;
}

bool RingElement::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const std::size_t d = terms_.begin()->degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& m) { return m.degree() == d; });
}

std::size_t RingElement::degree() const
{
    if (terms_.empty())
        throw std::invalid_argument("degree of the zero element");
    if (!is_homogeneous())
        throw std::invalid_argument("degree of a non-homogeneous element");
    return terms_.begin()->degree();
}

void RingElement::toggle(const Monomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    for (const auto& m : other.terms_)
        toggle(m);
    return *this;
}

// ---------------------------------------------------------------------------
// Presentation

RingPresentation::RingPresentation(ModTwoTriple triple) : triple_(std::move(triple))
{
    if (triple_.r > 64)
        throw std::invalid_argument("at most 64 degree-one generators are supported");
    if (triple_.beta.rows() != triple_.r || triple_.beta.cols() != triple_.s)
        throw std::invalid_argument("beta must be r x s");
}

RingPresentation presentation(const FgAbGroup& a) { return RingPresentation(mod_two_triple(a)); }

RingElement RingPresentation::one() const { return RingElement(Monomial{0, Exponents(s(), 0)}); }

RingElement RingPresentation::x(std::size_t i) const
{
    if (i >= r())
        throw std::out_of_range("x index out of range");
    return RingElement(Monomial{std::uint64_t{1} << i, Exponents(s(), 0)});
}

RingElement RingPresentation::y(std::size_t j) const
{
    if (j >= s())
        throw std::out_of_range("y index out of range");
    Monomial m{0, Exponents(s(), 0)};
    m.alpha[j] = 1;
    return RingElement(std::move(m));
}

RingElement RingPresentation::square_of_x(std::size_t i) const
{
    RingElement out;
    for (std::size_t j = 0; j < s(); ++j)
        if (square_coefficient(i, j))
            out += y(j);
    return out;
}

std::string RingPresentation::to_string() const
{
    std::string out = "F2[";
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < r(); ++i)
        gens.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < s(); ++j)
        gens.push_back("y" + std::to_string(j + 1));
    for (std::size_t g = 0; g < gens.size(); ++g)
        out += (g ? ", " : "") + gens[g];
    out += "]";
    if (r() > 0) {
        out += " / (";
        for (std::size_t i = 0; i < r(); ++i) {
            out += (i ? ", " : "") + std::string("x") + std::to_string(i + 1) + "^2";
            const RingElement sq = square_of_x(i);
            if (!sq.is_zero())
                out += " + " + mod2cohom::to_string(sq);
        }
        out += ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication

namespace {

// a * b accumulated into out. Each shared x_i contributes a factor x_i^2,
// which is a linear form in the y's.
void multiply_monomials(const RingPresentation& p, const Monomial& a, const Monomial& b, RingElement& out)
{
    const std::uint64_t shared = a.eps & b.eps;
    Exponents alpha(p.s());
    for (std::size_t j = 0; j < p.s(); ++j)
        alpha[j] = a.alpha[j] + b.alpha[j];
    std::set<Exponents> ys{alpha};
    for (std::uint64_t bits = shared; bits != 0; bits &= bits - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(bits));
        std::set<Exponents> next;
        for (const auto& e : ys)
            for (std::size_t j = 0; j < p.s(); ++j)
                if (p.square_coefficient(i, j)) {
                    Exponents f = e;
                    ++f[j];
                    toggle(next, f);
                }
        ys = std::move(next);
        if (ys.empty())
            return;
    }
    const std::uint64_t eps = a.eps ^ b.eps;
    for (const auto& e : ys)
        out.toggle(Monomial{eps, e});
}

}  // namespace

RingElement multiply(const RingPresentation& p, const RingElement& u, const RingElement& v)
{
    RingElement out;
    for (const auto& a : u.terms())
        for (const auto& b : v.terms())
            multiply_monomials(p, a, b, out);
    return out;
}

RingElement power(const RingPresentation& p, const RingElement& u, std::size_t e)
{
    RingElement acc = p.one();
    for (std::size_t i = 0; i < e; ++i)
        acc = multiply(p, acc, u);
    return acc;
}

// ---------------------------------------------------------------------------
// Bases and filtration

std::vector<std::vector<std::uint32_t>> sym_basis(std::size_t vars, std::size_t total)
{
    std::vector<Exponents> out;
    if (vars == 0) {
        if (total == 0)
            out.emplace_back();
        return out;
    }
    Exponents cur;
    sym_basis_rec(vars, total, cur, out);
    return out;
}

std::vector<Monomial> basis(const RingPresentation& p, std::size_t n)
{
    std::vector<Monomial> out;
    for (std::size_t yd = 0; 2 * yd <= n; ++yd) {
        const std::size_t xd = n - 2 * yd;
        if (xd > p.r())
            continue;
        std::vector<std::uint64_t> masks;
        combinations(p.r(), xd, 0, 0, masks);
        for (const auto& alpha : sym_basis(p.s(), yd))
            for (auto mask : masks)
                out.push_back(Monomial{mask, alpha});
    }
    return out;
}

std::size_t dim_h(const RingPresentation& p, std::size_t n) { return basis(p, n).size(); }

gf2::BitVector coordinates(const RingPresentation& p, const RingElement& u, std::size_t n)
{
    const auto b = basis(p, n);
    gf2::BitVector v(b.size());
    for (const auto& m : u.terms()) {
        auto it = std::lower_bound(b.begin(), b.end(), m);
        if (it == b.end() || !(*it == m))
            throw std::invalid_argument("element has a term outside degree " + std::to_string(n));
        v.set(static_cast<std::size_t>(it - b.begin()));
    }
    return v;
}

FiltrationReport filtration(const RingPresentation& p, std::size_t n)
{
    FiltrationReport rep;
    rep.n = n;
    const std::size_t top = n / 2;
    rep.phi_dims.assign(top + 2, 0);
    for (const auto& m : basis(p, n))
        for (std::size_t i = 0; i <= m.y_degree(); ++i)
            ++rep.phi_dims[i];
    rep.quotient_dims.resize(top + 1);
    for (std::size_t i = 0; i <= top; ++i)
        rep.quotient_dims[i] = rep.phi_dims[i] - rep.phi_dims[i + 1];
    return rep;
}

std::size_t filtration_level(const RingElement& u)
{
    if (u.is_zero())
        return static_cast<std::size_t>(-1);
    return u.terms().begin()->y_degree();
}

// ---------------------------------------------------------------------------
// Steenrod squares

RingElement sq(const RingPresentation& p, std::size_t k, const RingElement& u)
{
    if (!u.is_homogeneous())
        throw std::invalid_argument("sq: element is not homogeneous");
    RingElement out;
    for (const auto& m : u.terms()) {
        // pieces[e] = part of the total square of the factors so far that
        // raises degree by e; anything beyond k is dropped.
        std::vector<RingElement> pieces(k + 1);
        pieces[0] = p.one();
        for (std::uint64_t bits = m.eps; bits != 0; bits &= bits - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(bits));
            const RingElement xi = p.x(i);
            const RingElement xi2 = p.square_of_x(i);
            std::vector<RingElement> next(k + 1);
            for (std::size_t e = 0; e <= k; ++e) {
                next[e] += multiply(p, pieces[e], xi);
                if (e >= 1)
                    next[e] += multiply(p, pieces[e - 1], xi2);
            }
            pieces = std::move(next);
        }
        for (std::size_t j = 0; j < p.s(); ++j) {
            const std::uint32_t a = m.alpha[j];
            if (a == 0)
                continue;
            // (y + y^2)^a = sum_t C(a, t) y^(a+t); C(a, t) is odd iff t's bits lie in a's.
            std::vector<RingElement> next(k + 1);
            for (std::size_t e = 0; e <= k; ++e)
                for (std::size_t t = 0; 2 * t <= e && t <= a; ++t) {
                    if ((t & ~static_cast<std::size_t>(a)) != 0)
                        continue;
                    Monomial ym{0, Exponents(p.s(), 0)};
                    ym.alpha[j] = a + static_cast<std::uint32_t>(t);
                    next[e] += multiply(p, pieces[e - 2 * t], RingElement(ym));
                }
            pieces = std::move(next);
        }
        out += pieces[k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Induced maps

InducedRingMap::InducedRingMap(const GroupHom& f, RingPresentation source_ring, RingPresentation target_ring)
    : source_(std::move(source_ring)), target_(std::move(target_ring))
{
    if (!(source_.triple() == mod_two_triple(f.source())) || !(target_.triple() == mod_two_triple(f.target())))
        throw std::invalid_argument("induced_map: rings do not match the homomorphism's groups");
    const InducedTriple t = induced_on_triple(f);
    for (std::size_t k = 0; k < target_.r(); ++k) {
        RingElement img;
        for (std::size_t i = 0; i < source_.r(); ++i)
            if (t.fbar.get(k, i))
                img += source_.x(i);
        x_images_.push_back(std::move(img));
    }
    for (std::size_t l = 0; l < target_.s(); ++l) {
        RingElement img;
        for (std::size_t j = 0; j < source_.s(); ++j)
            if (t.f2.get(l, j))
                img += source_.y(j);
        y_images_.push_back(std::move(img));
    }
}

RingElement InducedRingMap::operator()(const RingElement& u) const
{
    RingElement out;
    for (const auto& m : u.terms()) {
        if (m.alpha.size() != target_.s())
            throw std::invalid_argument("induced_map: element does not belong to the target ring");
        RingElement prod = source_.one();
        for (std::uint64_t bits = m.eps; bits != 0 && !prod.is_zero(); bits &= bits - 1)
            prod = multiply(source_, prod, x_images_[static_cast<std::size_t>(std::countr_zero(bits))]);
        for (std::size_t l = 0; l < m.alpha.size() && !prod.is_zero(); ++l)
            for (std::uint32_t e = 0; e < m.alpha[l]; ++e)
                prod = multiply(source_, prod, y_images_[l]);
        out += prod;
    }
    return out;
}

RingElement induced_map(const GroupHom& f, const RingPresentation& source_ring, const RingPresentation& target_ring,
                        const RingElement& u)
{
    return InducedRingMap(f, source_ring, target_ring)(u);
}

// ---------------------------------------------------------------------------
// Cokernel description

std::vector<SymTerm> cokernel_target_basis(const RingPresentation& p, std::size_t n)
{
    std::vector<SymTerm> out;
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        const auto vs = sym_basis(p.r(), n - 2 * j);
        const auto ws = sym_basis(p.s(), j);
        for (const auto& v : vs)
            for (const auto& w : ws)
                out.push_back(SymTerm{v, w});
    }
    return out;
}

namespace {

class TargetIndex {
public:
    explicit TargetIndex(const std::vector<SymTerm>& terms)
    {
        for (std::size_t i = 0; i < terms.size(); ++i)
            index_.emplace(std::make_pair(terms[i].v, terms[i].w), i);
    }
    std::size_t operator()(const Exponents& v, const Exponents& w) const
    {
        auto it = index_.find(std::make_pair(v, w));
        if (it == index_.end())
            throw std::logic_error("cokernel map: image term outside the target basis");
        return it->second;
    }

private:
    std::map<std::pair<Exponents, Exponents>, std::size_t> index_;
};

// Sym^k(beta~^v)(a) in Sym(W): substitute x_i -> sum_j beta(i, j) y_j.
std::set<Exponents> substitute_beta(const RingPresentation& p, const Exponents& a)
{
    std::set<Exponents> poly{Exponents(p.s(), 0)};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::uint32_t e = 0; e < a[i]; ++e) {
            std::set<Exponents> next;
            for (const auto& w : poly)
                for (std::size_t j = 0; j < p.s(); ++j)
                    if (p.square_coefficient(i, j)) {
                        Exponents f = w;
                        ++f[j];
                        toggle(next, f);
                    }
            poly = std::move(next);
        }
    return poly;
}

Exponents add(const Exponents& a, const Exponents& b)
{
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

}  // namespace

CokernelMap cokernel_map(const RingPresentation& p, std::size_t n)
{
    CokernelMap cm;
    cm.n = n;
    cm.target = cokernel_target_basis(p, n);
    const TargetIndex index(cm.target);

    for (std::size_t k = 1; 2 * k <= n; ++k)
        for (std::size_t l = 0; 2 * k + l <= n; ++l) {
            if ((n - 2 * k - l) % 2 != 0)
                continue;
            const std::size_t m = (n - 2 * k - l) / 2;
            const auto as = sym_basis(p.r(), k);
            const auto bs = sym_basis(p.r(), l);
            const auto cs = sym_basis(p.s(), m);
            for (const auto& a : as)
                for (const auto& b : bs)
                    for (const auto& c : cs)
                        cm.source.push_back(CokernelSourceTerm{k, l, m, a, b, c});
        }

    std::vector<gf2::BitVector> rows;
    rows.reserve(cm.source.size());
    for (const auto& t : cm.source) {
        gf2::BitVector row(cm.target.size());
        Exponents frob(t.a.size());
        for (std::size_t i = 0; i < t.a.size(); ++i)
            frob[i] = 2 * t.a[i];
        row.flip(index(add(frob, t.b), t.c));
        for (const auto& w : substitute_beta(p, t.a))
            row.flip(index(t.b, add(w, t.c)));
        rows.push_back(std::move(row));
    }
    cm.matrix = gf2::transpose(gf2::Gf2Matrix::from_row_vectors(rows, cm.target.size()));
    return cm;
}

std::size_t cokernel_dims(const RingPresentation& p, std::size_t n)
{
    const CokernelMap cm = cokernel_map(p, n);
    return cm.target.size() - gf2::rank(cm.matrix);
}

gf2::Gf2Matrix explicit_h2_map(const RingPresentation& p)
{
    const auto target = cokernel_target_basis(p, 2);
    const TargetIndex index(target);
    gf2::Gf2Matrix m(target.size(), p.r());
    const Exponents zero_v(p.r(), 0);
    const Exponents zero_w(p.s(), 0);
    for (std::size_t i = 0; i < p.r(); ++i) {
        Exponents xsq = zero_v;
        xsq[i] = 2;
        m.flip(index(xsq, zero_w), i);
        for (std::size_t j = 0; j < p.s(); ++j)
            if (p.square_coefficient(i, j)) {
                Exponents yj = zero_w;
                yj[j] = 1;
                m.flip(index(zero_v, yj), i);
            }
    }
    return m;
}

gf2::Gf2Matrix explicit_h3_map(const RingPresentation& p)
{
    const auto target = cokernel_target_basis(p, 3);
    const TargetIndex index(target);
    const std::size_t r = p.r();
    gf2::Gf2Matrix m(target.size(), r * r);
    const Exponents zero_w(p.s(), 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t col = i * r + j;
            Exponents cube(r, 0);
            cube[i] += 2;
            cube[j] += 1;
            m.flip(index(cube, zero_w), col);
            Exponents xj(r, 0);
            xj[j] = 1;
            for (std::size_t t = 0; t < p.s(); ++t)
                if (p.square_coefficient(i, t)) {
                    Exponents yt = zero_w;
                    yt[t] = 1;
                    m.flip(index(xj, yt), col);
                }
        }
    return m;
}

// ---------------------------------------------------------------------------
// Isomorphism witness

std::size_t squaring_rank(const RingPresentation& p)
{
    std::vector<gf2::BitVector> rows;
    for (std::size_t i = 0; i < p.r(); ++i) {
        const RingElement x = p.x(i);
        rows.push_back(coordinates(p, multiply(p, x, x), 2));
    }
    return gf2::rank(gf2::Gf2Matrix::from_row_vectors(rows, dim_h(p, 2)));
}

WitnessReport ring_isomorphism_witness(const FgAbGroup& a, const FgAbGroup& b, std::size_t max_degree)
{
    WitnessReport rep;
    rep.a = a;
    rep.b = b;
    rep.max_degree = max_degree;
    const RingPresentation pa = presentation(a);
    const RingPresentation pb = presentation(b);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        rep.dims_a.push_back(dim_h(pa, n));
        rep.dims_b.push_back(dim_h(pb, n));
    }
    rep.dims_equal = rep.dims_a == rep.dims_b;
    rep.square_rank_a = squaring_rank(pa);
    rep.square_rank_b = squaring_rank(pb);
    rep.isomorphic = pa.r() == pb.r() && pa.s() == pb.s() && rep.square_rank_a == rep.square_rank_b;
    return rep;
}

std::string WitnessReport::summary() const
{
    std::string out;
    if (dims_equal) {
        out = "dims equal";
    } else {
        std::size_t n = 0;
        while (dims_a[n] == dims_b[n])
            ++n;
        out = "dims differ in degree " + std::to_string(n);
    }
    out += "; squaring rank " + std::to_string(square_rank_a) + " vs " + std::to_string(square_rank_b);
    out += isomorphic ? "; rings isomorphic" : "; rings NOT isomorphic";
    return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Monomial& m)
{
    std::vector<std::string> factors;
    for (std::uint64_t bits = m.eps; bits != 0; bits &= bits - 1)
        factors.push_back("x" + std::to_string(std::countr_zero(bits) + 1));
    for (std::size_t j = 0; j < m.alpha.size(); ++j) {
        if (m.alpha[j] == 0)
            continue;
        std::string f = "y" + std::to_string(j + 1);
        if (m.alpha[j] > 1)
            f += "^" + std::to_string(m.alpha[j]);
        factors.push_back(std::move(f));
    }
    if (factors.empty())
        return "1";
    std::string out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        out += "*" + factors[i];
    return out;
}

std::string to_string(const RingElement& u)
{
    if (u.is_zero())
        return "0";
    std::string out;
    for (const auto& m : u.terms())
        out += (out.empty() ? "" : " + ") + to_string(m);
    return out;
}

RingElement parse_element(const RingPresentation& p, const std::string& text)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("element parse error at position " + std::to_string(pos) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto number = [&]() -> std::size_t {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        return std::stoul(text.substr(start, pos - start));
    };

    RingElement total;
    for (;;) {
        RingElement term = p.one();
        for (;;) {
            skip_ws();
            if (pos >= text.size())
                fail("expected a factor");
            const char c = text[pos];
            RingElement factor;
            if (c == 'x' || c == 'y') {
                ++pos;
                const std::size_t idx = number();
                const std::size_t limit = c == 'x' ? p.r() : p.s();
                if (idx == 0 || idx > limit)
                    fail(std::string(1, c) + std::to_string(idx) + " is not a generator");
                factor = c == 'x' ? p.x(idx - 1) : p.y(idx - 1);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::size_t v = number();
                if (v > 1)
                    fail("coefficients live in F2; only 0 and 1 are allowed");
                factor = v == 1 ? p.one() : RingElement{};
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip_ws();
            std::size_t e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                e = number();
            }
            term = multiply(p, term, power(p, factor, e));
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        total += term;
        skip_ws();
        if (pos >= text.size())
            break;
        if (text[pos] != '+')
            fail("expected '+' or '*'");
        ++pos;
    }
    return total;
}

}  // namespace mod2cohom
