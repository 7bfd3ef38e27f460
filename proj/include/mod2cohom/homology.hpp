#pragma once

// Mod-2 homology at finite type. Gamma is handled as the graded dual of Sym,
// so every homology map here is the transpose of a cohomology map in the
// dual monomial bases.

#include "mod2cohom/cohomring.hpp"
#include "mod2cohom/fgabelian.hpp"
#include "mod2cohom/gradedalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace mod2cohom {

struct HomologyReport {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> psi_quotient_dims;  // dim Psi_i / Psi_(i-1), i = 0..floor(n/2)
    std::pair<std::size_t, std::size_t> kernel_matrix_shape;  // (rows, cols)
};

// The map Gamma-side of the cokernel description: transpose of
// cokernel_map(p, n).matrix. H_n is its kernel.
gf2::Gf2Matrix homology_kernel_map(const RingPresentation& p, std::size_t n);

std::size_t homology_dim(const FgAbGroup& a, std::size_t n);

HomologyReport psi_filtration(const FgAbGroup& a, std::size_t n);

struct ExactnessCertificate {
    std::size_t degree = 0;
    std::size_t middle_dim = 0;  // Gamma^2(A/2) + 2A, or Gamma^3(A/2) + A/2 (x) 2A
    std::size_t right_dim = 0;   // A/2, or A/2 (x) A/2
    std::size_t rank = 0;
    bool surjective = false;
    std::size_t kernel_dim = 0;
    std::size_t homology_dim = 0;
    bool exact() const { return surjective && kernel_dim == homology_dim; }
};

struct LowDegreeSequences {
    ExactnessCertificate h2;
    ExactnessCertificate h3;
};

// Builds the right-hand maps of
//   0 -> H_2 -> Gamma^2(A/2) + 2A -> A/2 -> 0
//   0 -> H_3 -> Gamma^3(A/2) + A/2 (x) 2A -> A/2 (x) A/2 -> 0
// as transposes of the explicit degree-2 and degree-3 relation maps.
LowDegreeSequences h2_h3_sequences(const FgAbGroup& a);

struct HopfSeriesCheck {
    GradedDims homology;   // dim H_n from the kernel computation
    GradedDims predicted;  // (1 + t)^r / (1 - t^2)^s
    bool holds = false;
};

// Graded dimensions of H_* against the product of the Hilbert series of
// Lambda(A/2) and Gamma(2A[2]).
HopfSeriesCheck hopf_ses_dims(const FgAbGroup& a, std::size_t max_degree);

}  // namespace mod2cohom
