#pragma once

// Finitely generated abelian groups in invariant-factor form and the functor
// A |-> (A/2, 2A, beta~) where beta~ : 2A -> A/2 includes the 2-torsion and
// reduces mod 2.
//
// Canonical generators of A = Z^f + Z/d1 + ... + Z/dk (d1 | d2 | ... ) are
// ordered torsion first (in factor order), then free. Because of the
// divisibility chain the even factors form a suffix of the factor list, so
//   A/2 basis : even-torsion generators in factor order, then free generators;
//   2A basis  : (d/2) * g for each even-torsion generator g, same order.
// beta~ sends (d/2) g to (d/2) mod 2 times the class of g, and d/2 is odd
// exactly when d = 2 (mod 4).

#include "mod2cohom/gf2linalg.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mod2cohom {

// Dense integer matrix with exact entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);
    static IntMatrix diagonal(const std::vector<long>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_diagonal() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal, d11 | d22 | ..., non-negative
    IntMatrix v;  // cols x cols, unimodular
};

// U * m * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

class FgAbGroup {
public:
    FgAbGroup() = default;

    // Canonicalizes Z^free_rank + Z/o1 + Z/o2 + ... for arbitrary orders
    // o >= 1 (order 1 summands vanish). Throws std::invalid_argument on o < 1.
    static FgAbGroup from_cyclic(std::size_t free_rank, const std::vector<std::int64_t>& orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }

    std::size_t generator_count() const { return factors_.size() + free_rank_; }
    // Order of canonical generator j, or 0 for a free generator.
    std::int64_t generator_order(std::size_t j) const { return j < factors_.size() ? factors_[j] : 0; }
    std::size_t even_factor_count() const;
    std::size_t first_even_factor() const { return factors_.size() - even_factor_count(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    // Order of a finite group; throws std::domain_error when free_rank > 0.
    std::uint64_t order() const;

    std::string to_string() const;  // "Z^2 x Z/2 x Z/4", "0" for the trivial group

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

private:
    friend FgAbGroup from_presentation(const IntMatrix& relations, std::size_t generators);

    std::size_t free_rank_ = 0;
    std::vector<std::int64_t> factors_;
};

// Cokernel of the relation matrix (one relation per row, `generators`
// columns). An empty relation matrix presents a free group.
FgAbGroup from_presentation(const IntMatrix& relations, std::size_t generators);
inline FgAbGroup from_presentation(const IntMatrix& relations) { return from_presentation(relations, relations.cols()); }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

struct ModTwoTriple {
    std::size_t r = 0;  // dim A/2
    std::size_t s = 0;  // dim 2A
    gf2::Gf2Matrix beta;  // r x s

    friend bool operator==(const ModTwoTriple&, const ModTwoTriple&) = default;
};

ModTwoTriple mod_two_triple(const FgAbGroup& a);

// A homomorphism on canonical generators: column j is the image of source
// generator j in target coordinates. Torsion coordinates are stored reduced
// into [0, d).
class GroupHom {
public:
    // Throws std::invalid_argument unless every source generator of order d
    // is sent to an element killed by d, or the shape is wrong.
    GroupHom(FgAbGroup source, FgAbGroup target, std::vector<std::vector<std::int64_t>> matrix);

    static GroupHom identity(const FgAbGroup& a);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    std::int64_t entry(std::size_t target_gen, std::size_t source_gen) const { return matrix_[target_gen][source_gen]; }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

private:
    FgAbGroup source_;
    FgAbGroup target_;
    std::vector<std::vector<std::int64_t>> matrix_;
};

// g after f. Throws std::invalid_argument when f.target() != g.source().
GroupHom compose(const GroupHom& g, const GroupHom& f);

struct InducedTriple {
    gf2::Gf2Matrix fbar;  // A/2 -> A'/2, shape r' x r
    gf2::Gf2Matrix f2;    // 2A -> 2A', shape s' x s
};

InducedTriple induced_on_triple(const GroupHom& f);

// Parse errors carry the offending token and its 0-based character offset.
class GroupSpecError : public std::invalid_argument {
public:
    GroupSpecError(const std::string& message, std::string token, std::size_t position);
    const std::string& token() const { return token_; }
    std::size_t position() const { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

// `Z^k x Z/d1 x Z/d2 ...`, whitespace-insensitive, `x` or `*` between
// summands. `Z` means Z^1; `0` and `1` denote the trivial group.
FgAbGroup parse_group_spec(const std::string& text);

// Plain text relation matrix: first line `rows cols`, then `rows` lines of
// `cols` integers.
IntMatrix read_relation_matrix(std::istream& in);

}  // namespace mod2cohom
