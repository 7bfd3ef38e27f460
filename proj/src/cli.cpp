#include "mod2cohom/cli.hpp"

#include "mod2cohom/baroracle.hpp"
#include "mod2cohom/cohomring.hpp"
#include "mod2cohom/fgabelian.hpp"
#include "mod2cohom/gradedalg.hpp"
#include "mod2cohom/homology.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace mod2cohom::cli {

using nlohmann::json;

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

constexpr std::size_t kDefaultMaxDegree = 6;
constexpr std::size_t kDefaultBarDegree = 3;

struct LoadedGroup {
    std::string input;
    FgAbGroup group;
};

// `@path` reads a relation matrix file; anything else is a group spec.
LoadedGroup load_group(const std::string& spec)
{
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in)
            throw GroupSpecError("cannot open relation file", spec.substr(1), 1);
        return {spec, from_presentation(read_relation_matrix(in))};
    }
    return {spec, parse_group_spec(spec)};
}

json count_json(const Count& c)
{
    if (c.fits_ulong_p())
        return c.get_ui();
    return c.get_str();
}

json group_json(const LoadedGroup& g)
{
    return {{"input", g.input},
            {"canonical", g.group.to_string()},
            {"free_rank", g.group.free_rank()},
            {"invariant_factors", g.group.invariant_factors()}};
}

json triple_json(const ModTwoTriple& t)
{
    json beta = json::array();
    for (std::size_t i = 0; i < t.r; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.s; ++j)
            row.push_back(t.beta.get(i, j) ? 1 : 0);
        beta.push_back(row);
    }
    return {{"r", t.r}, {"s", t.s}, {"beta", beta}};
}

std::vector<std::string> relation_lines(const RingPresentation& p)
{
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < p.r(); ++i)
        lines.push_back("x" + std::to_string(i + 1) + "^2 = " + to_string(p.square_of_x(i)));
    return lines;
}

json ring_json(const RingPresentation& p)
{
    json gens = json::array();
    for (std::size_t i = 0; i < p.r(); ++i)
        gens.push_back({{"name", "x" + std::to_string(i + 1)}, {"degree", 1}});
    for (std::size_t j = 0; j < p.s(); ++j)
        gens.push_back({{"name", "y" + std::to_string(j + 1)}, {"degree", 2}});
    return {{"generators", gens}, {"relations", relation_lines(p)}, {"text", p.to_string()}};
}

json base_document(const std::string& command, const LoadedGroup& g)
{
    const RingPresentation p = presentation(g.group);
    return {{"schema", kSchema},
            {"command", command},
            {"group", group_json(g)},
            {"triple", triple_json(p.triple())},
            {"ring", ring_json(p)}};
}

void print_header(std::ostream& out, const LoadedGroup& g)
{
    const RingPresentation p = presentation(g.group);
    out << "group:     " << g.group.to_string() << "\n";
    out << "triple:    r = " << p.r() << ", s = " << p.s() << "\n";
    out << "ring:      " << p.to_string() << "\n";
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------

struct DimsRow {
    std::size_t degree;
    std::size_t ring;
    Count predicted;
    Count hilbert;
    std::size_t cokernel;
    std::optional<std::size_t> bar;
};

std::vector<DimsRow> dims_rows(const FgAbGroup& a, std::size_t max_degree, std::optional<std::size_t> bar_max,
                               const BarOptions& opts)
{
    const RingPresentation p = presentation(a);
    const GradedDims pred = predicted_dims(p.triple(), max_degree);
    const GradedDims hilb = hilbert_series_oracle(a, max_degree);
    std::optional<BarComplex> bar;
    if (bar_max && a.is_finite())
        bar.emplace(FiniteGroup::from(a), opts);
    std::vector<DimsRow> rows;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        DimsRow row{n, dim_h(p, n), pred.dims[n], hilb.dims[n], cokernel_dims(p, n), std::nullopt};
        if (bar && n <= *bar_max)
            row.bar = bar->cohomology_dim(n);
        rows.push_back(row);
    }
    return rows;
}

bool row_agrees(const DimsRow& r)
{
    return r.predicted == r.ring && r.hilbert == r.ring && r.cokernel == r.ring && (!r.bar || *r.bar == r.ring);
}

json dims_json(const std::vector<DimsRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json row = {{"degree", r.degree},
                    {"ring", r.ring},
                    {"predicted", count_json(r.predicted)},
                    {"hilbert", count_json(r.hilbert)},
                    {"cokernel", r.cokernel}};
        if (r.bar)
            row["bar"] = *r.bar;
        arr.push_back(row);
    }
    return arr;
}

void print_dims(std::ostream& out, const std::vector<DimsRow>& rows)
{
    const bool with_bar = std::any_of(rows.begin(), rows.end(), [](const DimsRow& r) { return r.bar.has_value(); });
    out << "degree      ring   predicted    hilbert   cokernel" << (with_bar ? "        bar" : "") << "\n";
    for (const auto& r : rows) {
        out << std::setw(6) << r.degree << std::setw(10) << r.ring << std::setw(12) << r.predicted.get_str()
            << std::setw(11) << r.hilbert.get_str() << std::setw(11) << r.cokernel;
        if (with_bar)
            out << std::setw(11) << (r.bar ? std::to_string(*r.bar) : std::string("-"));
        out << (row_agrees(r) ? "" : "   MISMATCH") << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the report and whether it passed.

struct Outcome {
    json doc;
    bool ok = true;
};

Outcome cmd_ring(const LoadedGroup& g, std::ostream& out)
{
    Outcome o{base_document("ring", g)};
    const RingPresentation p = presentation(g.group);
    print_header(out, g);
    out << "generators:";
    for (std::size_t i = 0; i < p.r(); ++i)
        out << " x" << i + 1 << "(1)";
    for (std::size_t j = 0; j < p.s(); ++j)
        out << " y" << j + 1 << "(2)";
    out << "\nrelations:\n";
    for (const auto& line : relation_lines(p))
        out << "  " << line << "\n";
    o.doc["verdict"] = verdict(true);
    return o;
}

Outcome cmd_dims(const LoadedGroup& g, std::size_t max_degree, std::optional<std::size_t> bar_max,
                 const BarOptions& opts, std::ostream& out)
{
    Outcome o{base_document("dims", g)};
    const auto rows = dims_rows(g.group, max_degree, bar_max, opts);
    o.ok = std::all_of(rows.begin(), rows.end(), row_agrees);
    o.doc["dims"] = dims_json(rows);
    o.doc["verdict"] = verdict(o.ok);
    print_header(out, g);
    print_dims(out, rows);
    out << "verdict:   " << verdict(o.ok) << "\n";
    return o;
}

Outcome cmd_filtration(const LoadedGroup& g, std::size_t n, std::ostream& out)
{
    Outcome o{base_document("filtration", g)};
    const RingPresentation p = presentation(g.group);
    const FiltrationReport rep = filtration(p, n);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; 2 * i <= n; ++i)
        expected.push_back(Count(lambda_dim(static_cast<long>(p.r()), static_cast<long>(n - 2 * i)) *
                                 sym_dim(static_cast<long>(p.s()), static_cast<long>(i)))
                               .get_ui());
    o.ok = rep.quotient_dims == expected && rep.phi_dims.front() == dim_h(p, n) && rep.phi_dims.back() == 0;
    o.doc["filtration"] = {{"degree", n},
                           {"phi_dims", rep.phi_dims},
                           {"quotient_dims", rep.quotient_dims},
                           {"expected_quotient_dims", expected}};
    o.doc["verdict"] = verdict(o.ok);
    print_header(out, g);
    out << "degree " << n << " filtration by y-degree\n";
    out << "     i   dim Phi^i   quotient   Lambda^(n-2i) x Sym^i\n";
    for (std::size_t i = 0; i < rep.quotient_dims.size(); ++i)
        out << std::setw(6) << i << std::setw(12) << rep.phi_dims[i] << std::setw(11) << rep.quotient_dims[i]
            << std::setw(24) << expected[i] << "\n";
    out << std::setw(6) << rep.quotient_dims.size() << std::setw(12) << rep.phi_dims.back() << "\n";
    out << "verdict:   " << verdict(o.ok) << "\n";
    return o;
}

Outcome cmd_steenrod(const LoadedGroup& g, std::size_t max_degree, std::ostream& out)
{
    Outcome o{base_document("steenrod", g)};
    const RingPresentation p = presentation(g.group);
    print_header(out, g);

    json table = json::array();
    auto add_generator = [&](const std::string& name, const RingElement& gen, std::size_t deg) {
        json row = {{"generator", name}};
        for (std::size_t k = 0; k <= deg; ++k) {
            const std::string v = to_string(sq(p, k, gen));
            row["Sq" + std::to_string(k)] = v;
            out << "  Sq^" << k << "(" << name << ") = " << v << "\n";
        }
        table.push_back(row);
    };
    out << "Steenrod squares on generators:\n";
    for (std::size_t i = 0; i < p.r(); ++i)
        add_generator("x" + std::to_string(i + 1), p.x(i), 1);
    for (std::size_t j = 0; j < p.s(); ++j)
        add_generator("y" + std::to_string(j + 1), p.y(j), 2);

    // Unstable axioms and Sq^1 Sq^1 = 0 on every basis monomial up to max_degree.
    std::size_t checked = 0, failures = 0;
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (const auto& m : basis(p, n)) {
            const RingElement u(m);
            bool ok = sq(p, 0, u) == u && sq(p, n, u) == multiply(p, u, u) && sq(p, n + 1, u).is_zero() &&
                      sq(p, 1, sq(p, 1, u)).is_zero();
            ++checked;
            failures += ok ? 0 : 1;
        }
    o.ok = failures == 0;
    o.doc["steenrod"] = {{"generators", table},
                         {"axioms", {{"max_degree", max_degree}, {"monomials_checked", checked}, {"failures", failures}}}};
    o.doc["verdict"] = verdict(o.ok);
    out << "unstable axioms and Sq^1 Sq^1 = 0 on " << checked << " basis monomials of degree <= " << max_degree
        << ": " << failures << " failures\n";
    out << "verdict:   " << verdict(o.ok) << "\n";
    return o;
}

json certificate_json(const ExactnessCertificate& c)
{
    return {{"degree", c.degree},           {"middle_dim", c.middle_dim}, {"right_dim", c.right_dim},
            {"rank", c.rank},               {"surjective", c.surjective}, {"kernel_dim", c.kernel_dim},
            {"homology_dim", c.homology_dim}, {"exact", c.exact()}};
}

Outcome cmd_homology(const LoadedGroup& g, std::size_t max_degree, std::ostream& out)
{
    Outcome o{base_document("homology", g)};
    const RingPresentation p = presentation(g.group);
    print_header(out, g);
    out << "degree   dim H_n   dim H^n   kernel map   Psi quotients\n";
    json rows = json::array();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const HomologyReport rep = psi_filtration(g.group, n);
        const std::size_t coh = dim_h(p, n);
        std::size_t psi_sum = 0;
        for (auto q : rep.psi_quotient_dims)
            psi_sum += q;
        const bool ok = rep.dim == coh && psi_sum == rep.dim;
        o.ok = o.ok && ok;
        rows.push_back({{"degree", n},
                        {"dim", rep.dim},
                        {"cohomology_dim", coh},
                        {"psi_quotient_dims", rep.psi_quotient_dims},
                        {"kernel_matrix_shape", {rep.kernel_matrix_shape.first, rep.kernel_matrix_shape.second}}});
        std::ostringstream psi;
        for (std::size_t i = 0; i < rep.psi_quotient_dims.size(); ++i)
            psi << (i ? " " : "") << rep.psi_quotient_dims[i];
        std::ostringstream shape;
        shape << rep.kernel_matrix_shape.first << "x" << rep.kernel_matrix_shape.second;
        out << std::setw(6) << n << std::setw(10) << rep.dim << std::setw(10) << coh << std::setw(13) << shape.str()
            << "   " << psi.str() << (ok ? "" : "   MISMATCH") << "\n";
    }
    const LowDegreeSequences seq = h2_h3_sequences(g.group);
    const HopfSeriesCheck hopf = hopf_ses_dims(g.group, max_degree);
    o.ok = o.ok && seq.h2.exact() && seq.h3.exact() && hopf.holds;
    json series = json::array();
    for (std::size_t n = 0; n < hopf.predicted.dims.size(); ++n)
        series.push_back(count_json(hopf.predicted.dims[n]));
    o.doc["homology"] = {{"degrees", rows},
                         {"h2_sequence", certificate_json(seq.h2)},
                         {"h3_sequence", certificate_json(seq.h3)},
                         {"hopf_series", {{"predicted", series}, {"holds", hopf.holds}}}};
    o.doc["verdict"] = verdict(o.ok);
    out << "H_2 sequence: " << (seq.h2.exact() ? "exact" : "NOT exact") << " (kernel " << seq.h2.kernel_dim
        << ", rank " << seq.h2.rank << "/" << seq.h2.right_dim << ")\n";
    out << "H_3 sequence: " << (seq.h3.exact() ? "exact" : "NOT exact") << " (kernel " << seq.h3.kernel_dim
        << ", rank " << seq.h3.rank << "/" << seq.h3.right_dim << ")\n";
    out << "Hilbert series (1+t)^r/(1-t^2)^s: " << (hopf.holds ? "matches" : "MISMATCH") << "\n";
    out << "verdict:   " << verdict(o.ok) << "\n";
    return o;
}

Outcome cmd_verify(const LoadedGroup& g, std::size_t bar_max, const BarOptions& opts, std::ostream& out)
{
    Outcome o{base_document("verify", g)};
    const RingPresentation p = presentation(g.group);
    print_header(out, g);

    const bool finite = g.group.is_finite();
    const auto rows = dims_rows(g.group, std::max(bar_max, kDefaultMaxDegree),
                                finite ? std::optional<std::size_t>(bar_max) : std::nullopt, opts);
    const bool dims_ok = std::all_of(rows.begin(), rows.end(), row_agrees);
    o.doc["dims"] = dims_json(rows);
    print_dims(out, rows);
    o.ok = dims_ok;

    json verification = {{"dims_agree", dims_ok}};
    if (!finite) {
        verification["bar_oracle"] = "skipped: group has free rank";
        out << "bar oracle: skipped (group has free rank; checked against the Hilbert series only)\n";
    } else {
        const RelationCertificate cert = verify_relations(g.group, bar_max, opts);
        json relations = json::array();
        for (const auto& r : cert.relations)
            relations.push_back({{"generator", "x" + std::to_string(r.index + 1)}, {"coboundary", r.coboundary}});
        json spans = json::array();
        for (const auto& s : cert.spans)
            spans.push_back({{"degree", s.degree},
                             {"ring_dim", s.ring_dim},
                             {"bar_dim", s.bar_dim},
                             {"span_dim", s.span_dim},
                             {"cocycles", s.cocycles}});

        BarComplex complex(FiniteGroup::from(g.group), opts);
        const CanonicalCocycles reps = canonical_cocycles(complex.group());
        json bockstein = json::array();
        bool bockstein_ok = true;
        auto check = [&](const std::string& name, const RingElement& u, std::size_t deg) {
            if (deg > bar_max)
                return;
            const bool ok = bockstein_matches_sq1(complex, p, reps, u);
            bockstein_ok = bockstein_ok && ok;
            bockstein.push_back({{"class", name}, {"matches_sq1", ok}});
        };
        for (std::size_t i = 0; i < p.r(); ++i)
            check("x" + std::to_string(i + 1), p.x(i), 1);
        for (std::size_t j = 0; j < p.s(); ++j)
            check("y" + std::to_string(j + 1), p.y(j), 2);

        verification["bar_oracle"] = {{"max_degree", bar_max},
                                      {"independent_generators", cert.independent_generators},
                                      {"relations", relations},
                                      {"spans", spans},
                                      {"bockstein", bockstein},
                                      {"passed", cert.passed() && bockstein_ok}};
        o.ok = o.ok && cert.passed() && bockstein_ok;

        out << "relations x_i^2 = beta(x_i) in the bar model:";
        for (const auto& r : cert.relations)
            out << " x" << r.index + 1 << (r.coboundary ? " ok" : " FAIL");
        out << "\nmonomial spans mod coboundaries:";
        for (const auto& s : cert.spans)
            out << " " << s.span_dim << "/" << s.ring_dim;
        out << "\nBockstein vs Sq^1 on generators: " << (bockstein_ok ? "agree" : "DISAGREE") << "\n";
    }
    o.doc["verification"] = verification;
    o.doc["verdict"] = verdict(o.ok);
    out << "verdict:   " << verdict(o.ok) << "\n";
    return o;
}

Outcome cmd_witness(const LoadedGroup& a, const LoadedGroup& b, std::size_t max_degree, std::ostream& out)
{
    const WitnessReport rep = ring_isomorphism_witness(a.group, b.group, max_degree);
    Outcome o;
    o.doc = {{"schema", kSchema},
             {"command", "witness"},
             {"groups", {group_json(a), group_json(b)}},
             {"triples", {triple_json(mod_two_triple(a.group)), triple_json(mod_two_triple(b.group))}},
             {"witness",
              {{"max_degree", max_degree},
               {"dims", {rep.dims_a, rep.dims_b}},
               {"dims_equal", rep.dims_equal},
               {"squaring_ranks", {rep.square_rank_a, rep.square_rank_b}},
               {"isomorphic", rep.isomorphic},
               {"summary", rep.summary()}}},
             {"verdict", verdict(true)}};
    out << "A: " << a.group.to_string() << "   ring " << presentation(a.group).to_string() << "\n";
    out << "B: " << b.group.to_string() << "   ring " << presentation(b.group).to_string() << "\n";
    out << rep.summary() << "\n";
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Mod-2 (co)homology of finitely generated abelian groups"};
    app.name("mod2cohom");
    app.require_subcommand(1);

    std::string spec, spec_b, json_path;
    std::size_t max_degree = kDefaultMaxDegree;
    std::size_t degree = 0;
    std::size_t bar_degree = kDefaultBarDegree;
    std::size_t budget_mib = 2048;

    const std::string spec_help = "group spec such as \"Z^2 x Z/2 x Z/4\", or @file with a relation matrix";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "write the report document to this path");
    };

    auto* ring = app.add_subcommand("ring", "print the ring presentation");
    ring->add_option("spec", spec, spec_help)->required();
    add_common(ring);

    auto* dims = app.add_subcommand("dims", "dimension table: ring, predicted, Hilbert series, cokernel, bar");
    dims->add_option("spec", spec, spec_help)->required();
    dims->add_option("--max-degree", max_degree, "highest degree")->capture_default_str();
    auto* dims_bar = dims->add_option("--bar-max-degree", bar_degree, "add a bar-complex column up to this degree");
    dims->add_option("--memory-budget-mib", budget_mib, "bar-complex memory budget")->capture_default_str();
    add_common(dims);

    auto* filt = app.add_subcommand("filtration", "y-adic filtration of H^n");
    filt->add_option("spec", spec, spec_help)->required();
    filt->add_option("-n,--degree", degree, "degree n")->required();
    add_common(filt);

    auto* steen = app.add_subcommand("steenrod", "Steenrod squares on generators and axiom checks");
    steen->add_option("spec", spec, spec_help)->required();
    steen->add_option("--max-degree", max_degree, "highest degree checked")->capture_default_str();
    add_common(steen);

    auto* hom = app.add_subcommand("homology", "homology dimensions, Psi filtration, H_2/H_3 sequences");
    hom->add_option("spec", spec, spec_help)->required();
    hom->add_option("--max-degree", max_degree, "highest degree")->capture_default_str();
    add_common(hom);

    auto* ver = app.add_subcommand("verify", "cross-check against the bar-complex oracle");
    ver->add_option("spec", spec, spec_help)->required();
    ver->add_option("--bar-max-degree", bar_degree, "highest bar degree")->capture_default_str();
    ver->add_option("--memory-budget-mib", budget_mib, "bar-complex memory budget")->capture_default_str();
    add_common(ver);

    auto* wit = app.add_subcommand("witness", "decide whether two groups have isomorphic cohomology rings");
    wit->add_option("spec_a", spec, spec_help)->required();
    wit->add_option("spec_b", spec_b, spec_help)->required();
    wit->add_option("--max-degree", max_degree, "compare dimensions up to this degree")->capture_default_str();
    add_common(wit);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    Outcome outcome;
    try {
        BarOptions opts;
        opts.memory_budget_bytes = budget_mib << 20;
        if (ring->parsed()) {
            outcome = cmd_ring(load_group(spec), out);
        } else if (dims->parsed()) {
            std::optional<std::size_t> bar;
            if (dims_bar->count() > 0)
                bar = bar_degree;
            outcome = cmd_dims(load_group(spec), max_degree, bar, opts, out);
        } else if (filt->parsed()) {
            outcome = cmd_filtration(load_group(spec), degree, out);
        } else if (steen->parsed()) {
            outcome = cmd_steenrod(load_group(spec), max_degree, out);
        } else if (hom->parsed()) {
            outcome = cmd_homology(load_group(spec), max_degree, out);
        } else if (ver->parsed()) {
            outcome = cmd_verify(load_group(spec), bar_degree, opts, out);
        } else if (wit->parsed()) {
            outcome = cmd_witness(load_group(spec), load_group(spec_b), max_degree, out);
        }
    } catch (const GroupSpecError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kResourceError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << json_path << "\n";
            return kUsageError;
        }
        f << render_json(outcome.doc);
    }
    return outcome.ok ? kPass : kVerificationFailed;
}

}  // namespace mod2cohom::cli
