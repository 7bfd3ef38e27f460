#include "mod2cohom/baroracle.hpp"

#include <algorithm>
#include <limits>

namespace mod2cohom {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders))
{
    for (auto m : orders_) {
        if (m < 2)
            throw std::invalid_argument("cyclic factor orders must be >= 2, got " + std::to_string(m));
        if (order_ > (std::size_t{1} << 20) / static_cast<std::size_t>(m))
            throw ResourceError("group order exceeds the bar-oracle limit of 2^20 elements");
        order_ *= static_cast<std::size_t>(m);
    }
    table_.resize(order_ * order_);
    neg_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
            std::size_t sum = 0, stride = 1;
            for (std::size_t i = 0; i < orders_.size(); ++i) {
                const auto m = static_cast<std::size_t>(orders_[i]);
                const std::size_t c = (a / stride % m + b / stride % m) % m;
                sum += c * stride;
                stride *= m;
            }
            table_[a * order_ + b] = sum;
            if (sum == 0)
                neg_[a] = b;
        }
    }
}

FiniteGroup FiniteGroup::from(const FgAbGroup& a)
{
    if (!a.is_finite())
        throw std::invalid_argument("the bar oracle needs a finite group; " + a.to_string() + " has free rank " +
                                    std::to_string(a.free_rank()));
    return FiniteGroup(a.invariant_factors());
}

std::int64_t FiniteGroup::component(std::size_t element, std::size_t factor) const
{
    std::size_t stride = 1;
    for (std::size_t i = 0; i < factor; ++i)
        stride *= static_cast<std::size_t>(orders_[i]);
    return static_cast<std::int64_t>(element / stride % static_cast<std::size_t>(orders_[factor]));
}

std::size_t FiniteGroup::tuple_count(std::size_t n) const
{
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (c > std::numeric_limits<std::size_t>::max() / order_)
            throw ResourceError("|G|^" + std::to_string(n) + " overflows for |G| = " + std::to_string(order_));
        c *= order_;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Cochains

namespace {

void require_same_group(const BarCochain& f, const FiniteGroup& g)
{
    if (f.group != g.orders())
        throw std::invalid_argument("cochain belongs to a different group");
}

// Indices of the n+2 faces of an (n+1)-tuple s: drop g1, merge g_i g_(i+1)
// for i = 1..n, drop g_(n+1).
struct Faces {
    const FiniteGroup& g;
    std::size_t n;
    std::vector<std::size_t> pow;  // |G|^k, k = 0..n+1

    Faces(const FiniteGroup& group, std::size_t degree) : g(group), n(degree)
    {
        pow.push_back(1);
        for (std::size_t k = 0; k <= n; ++k)
            pow.push_back(pow.back() * g.order());
    }

    template <class Fn>
    void visit(std::size_t s, Fn&& fn) const
    {
        const std::size_t N = g.order();
        fn(std::size_t{0}, s / N);
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t low = s % pow[i - 1];
            const std::size_t gi = s / pow[i - 1] % N;
            const std::size_t gj = s / pow[i] % N;
            const std::size_t high = s / pow[i + 1];
            fn(i, low + pow[i - 1] * g.add(gi, gj) + pow[i] * high);
        }
        fn(n + 1, s % pow[n]);
    }
};

}  // namespace

BarCochain zero_cochain(const FiniteGroup& g, std::size_t degree)
{
    return BarCochain{g.orders(), degree, gf2::BitVector(g.tuple_count(degree))};
}

BarCochain unit_cochain(const FiniteGroup& g)
{
    BarCochain u = zero_cochain(g, 0);
    u.values.set(0);
    return u;
}

BarCochain differential(const FiniteGroup& g, const BarCochain& f)
{
    require_same_group(f, g);
    BarCochain out = zero_cochain(g, f.degree + 1);
    const Faces faces(g, f.degree);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        bool bit = false;
        faces.visit(s, [&](std::size_t, std::size_t idx) { bit ^= f.values.get(idx); });
        if (bit)
            out.values.set(s);
    }
    return out;
}

BarCochain cup(const BarCochain& f, const BarCochain& h)
{
    if (f.group != h.group)
        throw std::invalid_argument("cup: cochains live on different groups");
    const std::size_t fp = f.values.size();
    BarCochain out{f.group, f.degree + h.degree, gf2::BitVector(fp * h.values.size())};
    for (std::size_t tq = 0; tq < h.values.size(); ++tq) {
        if (!h.values.get(tq))
            continue;
        for (std::size_t tp = 0; tp < fp; ++tp)
            if (f.values.get(tp))
                out.values.set(tp + fp * tq);
    }
    return out;
}

gf2::Gf2Matrix coboundary_rows(const FiniteGroup& g, std::size_t n, const BarOptions& opts)
{
    const std::size_t rows = g.tuple_count(n);
    const std::size_t cols = g.tuple_count(n + 1);
    const double bytes = static_cast<double>(rows) * static_cast<double>(gf2::words_for(cols)) * 8.0;
    if (bytes > static_cast<double>(opts.memory_budget_bytes))
        throw ResourceError("bar differential in degree " + std::to_string(n) + " with |G|^" + std::to_string(n + 1) +
                            " = " + std::to_string(cols) + " cochain coordinates needs " +
                            std::to_string(static_cast<unsigned long long>(bytes)) + " bytes, budget is " +
                            std::to_string(opts.memory_budget_bytes));

    const std::size_t N = g.order();
    std::vector<std::size_t> pow{1};
    for (std::size_t k = 0; k <= n; ++k)
        pow.push_back(pow.back() * N);

    gf2::Gf2Matrix m(rows, cols);
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t a = 0; a < N; ++a) {
            m.flip(t, a + N * t);        // f(g2..g_(n+1)) with g1 = a
            m.flip(t, t + pow[n] * a);   // f(g1..g_n) with g_(n+1) = a
        }
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t low = t % pow[i - 1];
            const std::size_t ti = t / pow[i - 1] % N;
            const std::size_t high = t / pow[i];
            for (std::size_t a = 0; a < N; ++a) {
                const std::size_t b = g.add(ti, g.negate(a));
                m.flip(t, low + pow[i - 1] * a + pow[i] * b + pow[i + 1] * high);
            }
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// BarComplex

const gf2::Gf2Matrix& BarComplex::rows(std::size_t n)
{
    auto it = rows_.find(n);
    if (it == rows_.end())
        it = rows_.emplace(n, coboundary_rows(group_, n, opts_)).first;
    return it->second;
}

gf2::Gf2Matrix BarComplex::differential_matrix(std::size_t n) { return gf2::transpose(rows(n)); }

std::size_t BarComplex::differential_rank(std::size_t n)
{
    auto it = ranks_.find(n);
    if (it != ranks_.end())
        return it->second;
    const std::size_t r = gf2::rank(rows(n));
    ranks_.emplace(n, r);
    return r;
}

std::size_t BarComplex::cohomology_dim(std::size_t n)
{
    const std::size_t outgoing = differential_rank(n);
    const std::size_t incoming = n == 0 ? 0 : differential_rank(n - 1);
    return group_.tuple_count(n) - outgoing - incoming;
}

bool BarComplex::is_cocycle(const BarCochain& f) const { return differential(group_, f).values.is_zero(); }

bool BarComplex::is_coboundary(const BarCochain& f)
{
    require_same_group(f, group_);
    if (f.degree == 0)
        return f.values.is_zero();
    return gf2::solve(differential_matrix(f.degree - 1), f.values).has_value();
}

gf2::EchelonBasis BarComplex::coboundary_span(std::size_t n)
{
    gf2::EchelonBasis span(group_.tuple_count(n));
    if (n == 0)
        return span;
    const gf2::Gf2Matrix& m = rows(n - 1);
    for (std::size_t t = 0; t < m.rows(); ++t)
        span.insert(m.row_vector(t));
    return span;
}

std::size_t cohomology_dim(const FiniteGroup& g, std::size_t n, const BarOptions& opts)
{
    BarComplex c(g, opts);
    return c.cohomology_dim(n);
}

// ---------------------------------------------------------------------------
// Representatives and relations

CanonicalCocycles canonical_cocycles(const FiniteGroup& g)
{
    CanonicalCocycles reps;
    const std::size_t N = g.order();
    for (std::size_t i = 0; i < g.orders().size(); ++i) {
        const std::int64_t m = g.orders()[i];
        if (m % 2 != 0)
            continue;
        BarCochain x = zero_cochain(g, 1);
        for (std::size_t a = 0; a < N; ++a)
            x.values.set(a, g.component(a, i) % 2 == 1);
        BarCochain y = zero_cochain(g, 2);
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t a = 0; a < N; ++a)
                y.values.set(a + N * b, g.component(a, i) + g.component(b, i) >= m);
        reps.x.push_back(std::move(x));
        reps.y.push_back(std::move(y));
    }
    return reps;
}

BarCochain realize(const FiniteGroup& g, const CanonicalCocycles& reps, const RingElement& u, std::size_t degree)
{
    BarCochain out = zero_cochain(g, degree);
    for (const auto& m : u.terms()) {
        if (m.degree() != degree)
            throw std::invalid_argument("realize: term of degree " + std::to_string(m.degree()) + ", expected " +
                                        std::to_string(degree));
        if (m.alpha.size() != reps.y.size())
            throw std::invalid_argument("realize: element does not match the representatives");
        BarCochain c = unit_cochain(g);
        for (std::size_t i = 0; i < reps.x.size(); ++i)
            if ((m.eps >> i) & 1U)
                c = cup(c, reps.x[i]);
        for (std::size_t j = 0; j < m.alpha.size(); ++j)
            for (std::uint32_t e = 0; e < m.alpha[j]; ++e)
                c = cup(c, reps.y[j]);
        out.values ^= c.values;
    }
    return out;
}

bool RelationCertificate::passed() const
{
    return independent_generators &&
           std::all_of(relations.begin(), relations.end(), [](const RelationCheck& c) { return c.coboundary; }) &&
           std::all_of(spans.begin(), spans.end(), [](const SpanCheck& s) { return s.ok(); });
}

RelationCertificate verify_relations(const FgAbGroup& a, std::size_t max_degree, const BarOptions& opts)
{
    BarComplex complex(FiniteGroup::from(a), opts);
    const FiniteGroup& g = complex.group();
    const RingPresentation p = presentation(a);
    const CanonicalCocycles reps = canonical_cocycles(g);
    if (reps.x.size() != p.r() || reps.y.size() != p.s())
        throw std::logic_error("representatives do not match the presentation");

    RelationCertificate cert;

    bool independent = true;
    if (max_degree >= 1) {
        gf2::EchelonBasis h1 = complex.coboundary_span(1);
        for (const auto& x : reps.x)
            independent = h1.insert(x.values) && independent;
    }
    if (max_degree >= 2) {
        gf2::EchelonBasis h2 = complex.coboundary_span(2);
        for (const auto& y : reps.y)
            independent = h2.insert(y.values) && independent;
    }
    cert.independent_generators = independent;

    if (max_degree >= 2)
        for (std::size_t i = 0; i < p.r(); ++i) {
            BarCochain rel = cup(reps.x[i], reps.x[i]);
            for (std::size_t j = 0; j < p.s(); ++j)
                if (p.square_coefficient(i, j))
                    rel.values ^= reps.y[j].values;
            cert.relations.push_back({i, complex.is_coboundary(rel)});
        }

    for (std::size_t n = 0; n <= max_degree; ++n) {
        SpanCheck s;
        s.degree = n;
        const auto monomials = basis(p, n);
        s.ring_dim = monomials.size();
        s.bar_dim = complex.cohomology_dim(n);
        gf2::EchelonBasis span = complex.coboundary_span(n);
        const std::size_t base = span.rank();
        s.cocycles = true;
        for (const auto& m : monomials) {
            const BarCochain c = realize(g, reps, RingElement(m), n);
            s.cocycles = s.cocycles && complex.is_cocycle(c);
            span.insert(c.values);
        }
        s.span_dim = span.rank() - base;
        cert.spans.push_back(s);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Bockstein

BarCochain bockstein_oracle(const FiniteGroup& g, const BarCochain& f)
{
    require_same_group(f, g);
    if (!differential(g, f).values.is_zero())
        throw std::invalid_argument("bockstein_oracle: input is not a cocycle");
    BarCochain out = zero_cochain(g, f.degree + 1);
    const Faces faces(g, f.degree);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        int sum = 0;
        faces.visit(s, [&](std::size_t face, std::size_t idx) {
            if (!f.values.get(idx))
                return;
            // Integral signs: (-1)^face.
            sum += (face % 2 == 0) ? 1 : 3;
        });
        sum %= 4;
        if (sum % 2 != 0)
            throw std::logic_error("bockstein_oracle: integral coboundary of a mod-2 cocycle is odd");
        if (sum == 2)
            out.values.set(s);
    }
    return out;
}

bool bockstein_matches_sq1(BarComplex& complex, const RingPresentation& p, const CanonicalCocycles& reps,
                           const RingElement& u)
{
    if (u.is_zero())
        return true;
    const std::size_t n = u.degree();
    const FiniteGroup& g = complex.group();
    BarCochain diff = bockstein_oracle(g, realize(g, reps, u, n));
    diff.values ^= realize(g, reps, sq(p, 1, u), n + 1).values;
    return complex.is_coboundary(diff);
}

}  // namespace mod2cohom
