#include "mod2cohom/fgabelian.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

namespace mod2cohom {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged rows in IntMatrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& entries)
{
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0)
                return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix multiply: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(dst, c) -= q * m(src, c);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, dst) -= q * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = f.d;
    const std::size_t rows = d.rows();
    const std::size_t cols = d.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || abs(d(r, c)) < abs(d(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                return f;

            swap_rows(d, t, pr);
            swap_rows(f.u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(f.v, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d(r, t) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                sub_row(d, r, t, q);
                sub_row(f.u, r, t, q);
                if (d(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d(t, c) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                sub_col(d, c, t, q);
                sub_col(f.v, c, t, q);
                if (d(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Pivot must divide the whole trailing block; otherwise fold the
            // offending row into row t and go again with a smaller remainder.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
                        sub_row(d, t, r, -1);
                        sub_row(f.u, t, r, -1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c)
                d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < rows; ++c)
                f.u(t, c) = -f.u(t, c);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup from_presentation(const IntMatrix& relations, std::size_t generators)
{
    if (relations.rows() > 0 && relations.cols() != generators)
        throw std::invalid_argument("relation matrix has " + std::to_string(relations.cols()) + " columns, expected " +
                                    std::to_string(generators));
    FgAbGroup g;
    if (relations.rows() == 0) {
        g.free_rank_ = generators;
        return g;
    }
    const SmithForm snf = smith_normal_form(relations);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
        const mpz_class& e = snf.d(i, i);
        if (e == 0)
            continue;
        ++nonzero;
        if (e > 1) {
            if (!e.fits_slong_p())
                throw std::overflow_error("invariant factor " + e.get_str() + " exceeds 64-bit range");
            g.factors_.push_back(e.get_si());
        }
    }
    g.free_rank_ = generators - nonzero;
    return g;
}

FgAbGroup FgAbGroup::from_cyclic(std::size_t free_rank, const std::vector<std::int64_t>& orders)
{
    for (auto o : orders)
        if (o < 1)
            throw std::invalid_argument("cyclic order must be >= 1, got " + std::to_string(o));
    IntMatrix rel(orders.size(), orders.size() + free_rank);
    for (std::size_t i = 0; i < orders.size(); ++i)
        rel(i, i) = static_cast<long>(orders[i]);
    return from_presentation(rel, orders.size() + free_rank);
}

std::size_t FgAbGroup::even_factor_count() const
{
    return static_cast<std::size_t>(std::count_if(factors_.begin(), factors_.end(), [](std::int64_t d) { return d % 2 == 0; }));
}

std::uint64_t FgAbGroup::order() const
{
    if (free_rank_ > 0)
        throw std::domain_error("group " + to_string() + " is infinite");
    std::uint64_t n = 1;
    for (auto d : factors_) {
        if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d))
            throw std::overflow_error("group order exceeds 64-bit range");
        n *= static_cast<std::uint64_t>(d);
    }
    return n;
}

std::string FgAbGroup::to_string() const
{
    std::vector<std::string> parts;
    if (free_rank_ == 1)
        parts.emplace_back("Z");
    else if (free_rank_ > 1)
        parts.push_back("Z^" + std::to_string(free_rank_));
    for (auto d : factors_)
        parts.push_back("Z/" + std::to_string(d));
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " x " + parts[i];
    return out;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<std::int64_t> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbGroup::from_cyclic(a.free_rank() + b.free_rank(), orders);
}

ModTwoTriple mod_two_triple(const FgAbGroup& a)
{
    ModTwoTriple t;
    t.s = a.even_factor_count();
    t.r = t.s + a.free_rank();
    t.beta = gf2::Gf2Matrix(t.r, t.s);
    const std::size_t first = a.first_even_factor();
    for (std::size_t i = 0; i < t.s; ++i)
        if (a.invariant_factors()[first + i] % 4 == 2)
            t.beta.set(i, i);
    return t;
}

// ---------------------------------------------------------------------------
// Homomorphisms

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("homomorphism entry overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("homomorphism entry overflow");
    return out;
}

// Position of canonical generator j in the A/2 basis, or npos.
std::size_t mod2_index(const FgAbGroup& a, std::size_t j)
{
    const std::size_t first = a.first_even_factor();
    const std::size_t torsion = a.invariant_factors().size();
    if (j < first)
        return static_cast<std::size_t>(-1);
    return j < torsion ? j - first : a.even_factor_count() + (j - torsion);
}

}  // namespace

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, std::vector<std::vector<std::int64_t>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    const std::size_t rows = target_.generator_count();
    const std::size_t cols = source_.generator_count();
    if (matrix_.size() != rows)
        throw std::invalid_argument("homomorphism matrix needs " + std::to_string(rows) + " rows, got " +
                                    std::to_string(matrix_.size()));
    for (std::size_t k = 0; k < rows; ++k) {
        if (matrix_[k].size() != cols)
            throw std::invalid_argument("homomorphism matrix needs " + std::to_string(cols) + " columns");
        const std::int64_t dk = target_.generator_order(k);
        for (std::size_t j = 0; j < cols; ++j) {
            if (dk != 0)
                matrix_[k][j] = mod_floor(matrix_[k][j], dk);
            const std::int64_t dj = source_.generator_order(j);
            if (dj == 0)
                continue;
            // d_j * f(g_j) must vanish in the target.
            const bool ok = dk == 0 ? matrix_[k][j] == 0 : mod_floor(checked_mul(dj, matrix_[k][j]), dk) == 0;
            if (!ok)
                throw std::invalid_argument("not a homomorphism: generator " + std::to_string(j) + " of order " +
                                            std::to_string(dj) + " maps to an element of coordinate " +
                                            std::to_string(matrix_[k][j]) + " in target generator " +
                                            std::to_string(k));
        }
    }
}

GroupHom GroupHom::identity(const FgAbGroup& a)
{
    const std::size_t n = a.generator_count();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return GroupHom(a, a, std::move(m));
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: " + f.target().to_string() + " != " + g.source().to_string());
    const std::size_t rows = g.target().generator_count();
    const std::size_t mid = f.target().generator_count();
    const std::size_t cols = f.source().generator_count();
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t k = 0; k < rows; ++k) {
        const std::int64_t dk = g.target().generator_order(k);
        for (std::size_t j = 0; j < cols; ++j) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < mid; ++t) {
                acc = checked_add(acc, checked_mul(g.entry(k, t), f.entry(t, j)));
                if (dk != 0)
                    acc = mod_floor(acc, dk);
            }
            m[k][j] = acc;
        }
    }
    return GroupHom(f.source(), g.target(), std::move(m));
}

InducedTriple induced_on_triple(const GroupHom& f)
{
    const FgAbGroup& a = f.source();
    const FgAbGroup& b = f.target();
    const ModTwoTriple ta = mod_two_triple(a);
    const ModTwoTriple tb = mod_two_triple(b);
    InducedTriple out{gf2::Gf2Matrix(tb.r, ta.r), gf2::Gf2Matrix(tb.s, ta.s)};

    for (std::size_t j = 0; j < a.generator_count(); ++j) {
        const std::size_t col = mod2_index(a, j);
        if (col == static_cast<std::size_t>(-1))
            continue;
        for (std::size_t k = 0; k < b.generator_count(); ++k) {
            const std::size_t row = mod2_index(b, k);
            if (row != static_cast<std::size_t>(-1) && mod_floor(f.entry(k, j), 2) == 1)
                out.fbar.set(row, col);
        }
    }

    // (d/2) g_j lands in 2A'; on an even target generator of order d' its
    // coordinate is 0 or d'/2, and the 2A' coefficient is which one.
    const std::size_t a_first = a.first_even_factor();
    const std::size_t b_first = b.first_even_factor();
    for (std::size_t e = 0; e < ta.s; ++e) {
        const std::size_t j = a_first + e;
        const std::int64_t half = a.generator_order(j) / 2;
        for (std::size_t t = 0; t < tb.s; ++t) {
            const std::size_t k = b_first + t;
            const std::int64_t dk = b.generator_order(k);
            const std::int64_t coord = mod_floor(checked_mul(half, f.entry(k, j)), dk);
            if (coord == dk / 2)
                out.f2.set(t, e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

GroupSpecError::GroupSpecError(const std::string& message, std::string token, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position) + " (token '" + token + "')"),
      token_(std::move(token)),
      position_(position)
{
}

namespace {

struct SpecLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end()
    {
        skip_ws();
        return pos >= text.size();
    }
    std::string token_at(std::size_t p) const
    {
        if (p >= text.size())
            return "<end>";
        std::size_t e = p + 1;
        if (std::isdigit(static_cast<unsigned char>(text[p])))
            while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e])))
                ++e;
        return text.substr(p, e - p);
    }
    [[noreturn]] void fail(const std::string& message, std::size_t p) const
    {
        throw GroupSpecError(message, token_at(p), p);
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::int64_t integer()
    {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected an integer", start);
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range", start);
        }
    }
};

}  // namespace

FgAbGroup parse_group_spec(const std::string& text)
{
    SpecLexer lex{text};
    if (lex.at_end())
        lex.fail("empty group spec", lex.pos);

    std::size_t free_rank = 0;
    std::vector<std::int64_t> orders;
    for (;;) {
        lex.skip_ws();
        const std::size_t start = lex.pos;
        if (lex.accept('Z')) {
            if (lex.accept('^')) {
                free_rank += static_cast<std::size_t>(lex.integer());
            } else if (lex.accept('/')) {
                lex.skip_ws();
                const std::size_t at = lex.pos;
                const std::int64_t d = lex.integer();
                if (d < 1)
                    lex.fail("cyclic order must be at least 1", at);
                orders.push_back(d);
            } else {
                free_rank += 1;
            }
        } else if (lex.pos < text.size() && (text[lex.pos] == '0' || text[lex.pos] == '1')) {
            const std::int64_t v = lex.integer();
            if (v > 1)
                lex.fail("unexpected integer; write Z/d for a cyclic group", start);
        } else {
            lex.fail("expected 'Z', 'Z^k', 'Z/d', '0' or '1'", start);
        }
        if (lex.at_end())
            break;
        const std::size_t sep = lex.pos;
        if (!lex.accept('x') && !lex.accept('*'))
            lex.fail("expected separator 'x' or '*'", sep);
        if (lex.at_end())
            lex.fail("expected a summand after the separator", lex.pos);
    }
    return FgAbGroup::from_cyclic(free_rank, orders);
}

IntMatrix read_relation_matrix(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };
    if (!next_line())
        throw GroupSpecError("relation file is empty", "<end>", 0);
    std::istringstream header(line);
    long rows = -1, cols = -1;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0)
        throw GroupSpecError("expected header 'rows cols'", line, line_no);
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long r = 0; r < rows; ++r) {
        if (!next_line())
            throw GroupSpecError("missing relation row " + std::to_string(r + 1), "<end>", line_no);
        std::istringstream row(line);
        for (long c = 0; c < cols; ++c) {
            std::string tok;
            if (!(row >> tok))
                throw GroupSpecError("row has too few entries", line, line_no);
            try {
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = mpz_class(tok, 10);
            } catch (const std::invalid_argument&) {
                throw GroupSpecError("not an integer", tok, line_no);
            }
        }
        std::string extra;
        if (row >> extra)
            throw GroupSpecError("row has too many entries", extra, line_no);
    }
    return m;
}

}  // namespace mod2cohom
