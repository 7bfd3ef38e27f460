#include "mod2cohom/homology.hpp"

namespace mod2cohom {

gf2::Gf2Matrix homology_kernel_map(const RingPresentation& p, std::size_t n)
{
    return gf2::transpose(cokernel_map(p, n).matrix);
}

std::size_t homology_dim(const FgAbGroup& a, std::size_t n)
{
    const gf2::Gf2Matrix k = homology_kernel_map(presentation(a), n);
    return k.cols() - gf2::rank(k);
}

HomologyReport psi_filtration(const FgAbGroup& a, std::size_t n)
{
    const ModTwoTriple t = mod_two_triple(a);
    HomologyReport rep;
    rep.n = n;
    for (std::size_t i = 0; 2 * i <= n; ++i) {
        const Count q = lambda_dim(static_cast<long>(t.r), static_cast<long>(n - 2 * i)) *
                        sym_dim(static_cast<long>(t.s), static_cast<long>(i));
        rep.psi_quotient_dims.push_back(q.get_ui());
    }
    const gf2::Gf2Matrix k = homology_kernel_map(presentation(a), n);
    rep.kernel_matrix_shape = {k.rows(), k.cols()};
    rep.dim = k.cols() - gf2::rank(k);
    return rep;
}

namespace {

ExactnessCertificate certify(const gf2::Gf2Matrix& right_map, std::size_t degree, const FgAbGroup& a)
{
    ExactnessCertificate c;
    c.degree = degree;
    c.middle_dim = right_map.cols();
    c.right_dim = right_map.rows();
    c.rank = gf2::rank(right_map);
    c.surjective = c.rank == c.right_dim;
    c.kernel_dim = gf2::kernel_basis(right_map).rows();
    c.homology_dim = homology_dim(a, degree);
    return c;
}

}  // namespace

LowDegreeSequences h2_h3_sequences(const FgAbGroup& a)
{
    const RingPresentation p = presentation(a);
    return {certify(gf2::transpose(explicit_h2_map(p)), 2, a), certify(gf2::transpose(explicit_h3_map(p)), 3, a)};
}

HopfSeriesCheck hopf_ses_dims(const FgAbGroup& a, std::size_t max_degree)
{
    const ModTwoTriple t = mod_two_triple(a);
    HopfSeriesCheck check;
    for (std::size_t n = 0; n <= max_degree; ++n)
        check.homology.dims.emplace_back(static_cast<unsigned long>(homology_dim(a, n)));
    check.predicted = exterior_times_divided_series(t.r, t.s, max_degree);
    check.holds = check.homology == check.predicted;
    return check;
}

}  // namespace mod2cohom
