#pragma once

// Dense linear algebra over GF(2). Rows are packed into 64-bit words,
// bit j of a row lives in word j / 64 at position j % 64.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mod2cohom::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}
    static BitVector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool v = true)
    {
        const Word mask = Word{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    bool is_zero() const;
    std::size_t popcount() const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    std::string to_string() const;  // "0110..."

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }
    static Gf2Matrix identity(std::size_t n);
    // Throws std::invalid_argument on ragged input or entries other than 0/1.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols = 0);
    static Gf2Matrix from_row_vectors(const std::vector<BitVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true)
    {
        Word& w = data_[r * stride_ + c / kWordBits];
        const Word mask = Word{1} << (c % kWordBits);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    bool is_zero() const;
    // Padding bits past cols() in every row are zero.
    bool padding_clear() const;

    BitVector apply(const BitVector& x) const;  // this * x

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

std::size_t rank(const Gf2Matrix& m);

// Rows of the result form a basis of {v : m v = 0}, one per non-pivot column
// of the reduced row echelon form, in increasing column order.
Gf2Matrix kernel_basis(const Gf2Matrix& m);

// Some x with m x = b, or nullopt. Throws std::invalid_argument when
// b.size() != m.rows().
std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b);

Gf2Matrix transpose(const Gf2Matrix& m);
// Throws std::invalid_argument when a.cols() != b.rows().
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b);

// Reduced row echelon form in place (leftmost column, topmost row pivoting).
// Returns the pivot column of each of the first rank rows.
std::vector<std::size_t> reduce_rows(Gf2Matrix& m);

// Incrementally maintained echelon basis of a subspace of GF(2)^n. Used for
// span and membership questions without re-eliminating from scratch.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // Returns true if v was independent of the current span (and adds it).
    bool insert(BitVector v);
    bool contains(BitVector v) const;

private:
    void reduce(BitVector& v) const;

    std::size_t dim_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace mod2cohom::gf2
