#include "mod2cohom/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mod2cohom::gf2 {

namespace {

// Index of the lowest set bit among the first `bits` positions, or bits if none.
std::size_t lowest_set_bit(std::span<const Word> words, std::size_t bits)
{
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] != 0) {
            const std::size_t pos = w * kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
            return std::min(pos, bits);
        }
    }
    return bits;
}

Word tail_mask(std::size_t cols)
{
    const std::size_t used = cols % kWordBits;
    return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

}  // namespace

BitVector BitVector::from_bits(const std::vector<int>& bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1)
            throw std::invalid_argument("bit vector entries must be 0 or 1");
        v.set(i, bits[i] == 1);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw std::invalid_argument("bit vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::is_zero() const
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged rows in Gf2Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != 0 && rows[r][c] != 1)
                throw std::invalid_argument("Gf2Matrix entries must be 0 or 1");
            m.set(r, c, rows[r][c] == 1);
        }
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_row_vectors(const std::vector<BitVector>& rows, std::size_t cols)
{
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitVector Gf2Matrix::row_vector(std::size_t r) const
{
    BitVector v(cols_);
    std::copy_n(row(r).begin(), stride_, v.words().begin());
    return v;
}

void Gf2Matrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    std::copy_n(v.words().begin(), stride_, row(r).begin());
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst)
{
    const Word* s = data_.data() + src * stride_;
    Word* d = data_.data() + dst * stride_;
    for (std::size_t w = 0; w < stride_; ++w)
        d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool Gf2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool Gf2Matrix::padding_clear() const
{
    if (stride_ == 0)
        return true;
    const Word mask = tail_mask(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        if ((data_[r * stride_ + stride_ - 1] & ~mask) != 0)
            return false;
    return true;
}

BitVector Gf2Matrix::apply(const BitVector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    BitVector y(rows_);
    const auto xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        Word acc = 0;
        const Word* rw = data_.data() + r * stride_;
        for (std::size_t w = 0; w < stride_; ++w)
            acc ^= rw[w] & xw[w];
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

std::size_t rank(const Gf2Matrix& input)
{
    // Forward elimination only; rows above the pivot are left alone.
    Gf2Matrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t stride = m.words_per_row();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows; ++col) {
        const std::size_t w = col / kWordBits;
        const Word bit = Word{1} << (col % kWordBits);
        std::size_t found = pivot_row;
        while (found < rows && (m.row(found)[w] & bit) == 0)
            ++found;
        if (found == rows)
            continue;
        m.swap_rows(pivot_row, found);
        const Word* p = m.row(pivot_row).data();
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            Word* q = m.row(r).data();
            if ((q[w] & bit) == 0)
                continue;
            for (std::size_t k = w; k < stride; ++k)
                q[k] ^= p[k];
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::vector<std::size_t> reduce_rows(Gf2Matrix& m)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && !m.get(found, col))
            ++found;
        if (found == rows)
            continue;
        m.swap_rows(pivot_row, found);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != pivot_row && m.get(r, col))
                m.xor_row_into(pivot_row, r);
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

Gf2Matrix kernel_basis(const Gf2Matrix& input)
{
    Gf2Matrix m = input;
    const auto pivots = reduce_rows(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    Gf2Matrix basis(m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        basis.set(out, free_col);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (m.get(p, free_col))
                basis.set(out, pivots[p]);
        ++out;
    }
    return basis;
}

std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                    " but matrix has " + std::to_string(m.rows()) + " rows");
    // Column-space elimination: each column of m, tagged with its index,
    // becomes a row [column | e_j]. Reducing b against these rows records
    // which columns sum to b. Cost scales with cols(m), so tall coboundary
    // matrices stay cheap.
    const std::size_t n = m.rows();
    const std::size_t k = m.cols();
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivots;
    basis.reserve(k);

    auto reduce = [&](BitVector& v) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(pivots[i]))
                v ^= basis[i];
    };

    for (std::size_t j = 0; j < k; ++j) {
        BitVector v(n + k);
        for (std::size_t r = 0; r < n; ++r)
            if (m.get(r, j))
                v.set(r);
        v.set(n + j);
        reduce(v);
        const std::size_t piv = lowest_set_bit(v.words(), n + k);
        if (piv < n) {
            basis.push_back(std::move(v));
            pivots.push_back(piv);
        }
    }

    BitVector target(n + k);
    std::copy_n(b.words().begin(), b.words().size(), target.words().begin());
    reduce(target);
    if (lowest_set_bit(target.words(), n + k) < n)
        return std::nullopt;
    BitVector x(k);
    for (std::size_t j = 0; j < k; ++j)
        if (target.get(n + j))
            x.set(j);
    return x;
}

Gf2Matrix transpose(const Gf2Matrix& m)
{
    Gf2Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word bits = row[w];
            while (bits != 0) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    Gf2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        const auto arow = a.row(i);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            Word bits = arow[w];
            while (bits != 0) {
                const std::size_t t = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                const auto brow = b.row(t);
                for (std::size_t k = 0; k < out.size(); ++k)
                    out[k] ^= brow[k];
                bits &= bits - 1;
            }
        }
    }
    return c;
}

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shape mismatch");
    Gf2Matrix c = a;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        auto out = c.row(r);
        const auto in = b.row(r);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] ^= in[k];
    }
    return c;
}

void EchelonBasis::reduce(BitVector& v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
}

bool EchelonBasis::insert(BitVector v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("EchelonBasis: vector length mismatch");
    reduce(v);
    const std::size_t piv = lowest_set_bit(v.words(), dim_);
    if (piv == dim_)
        return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool EchelonBasis::contains(BitVector v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("EchelonBasis: vector length mismatch");
    reduce(v);
    return v.is_zero();
}

}  // namespace mod2cohom::gf2
