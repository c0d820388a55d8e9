#include "morava/k1.hpp"

namespace morava {

namespace {

// Generator of H^s(G_1, (E_1)_t) in terms of 1, zeta, eta and u.
Monomial sphere_label(unsigned long p, int s, int t)
{
    if (s == 0)
        return Monomial{};
    if (s == 1) {
        if (p != 2 || t % 4 == 0)
            return Monomial{0, 1, 0, 0, 0, -t / 2};
        return Monomial{0, 0, 1, 0, 0, 1 - t / 2};
    }
    if (p != 2)
        throw ComputationError("unexpected class at s >= 2 for odd p");
    const int k = s - t / 2;
    if (k % 2 == 0)
        return Monomial{0, 0, s, 0, 0, k};
    return Monomial{0, 1, s - 1, 0, 0, k - 1};
}

void add_cohomology(Chart& c, int s, int t, const CyclicDecomp& d, const Monomial& label)
{
    if (d.is_zero())
        return;
    if (d.num_summands() != 1)
        throw ComputationError("E_2 entry at (" + std::to_string(s) + "," + std::to_string(t) +
                               ") is not cyclic: " + d.to_string());
    c.add(s, t, Summand{d.factors()[0], label});
}

}  // namespace

Chart e2_page(unsigned long p, int s_max, int stem_lo, int stem_hi, unsigned M)
{
    Chart c(p, 2, s_max, stem_lo, stem_hi);
    for (int s = 0; s <= s_max; ++s)
        for (int t = stem_lo + s; t <= stem_hi + s; ++t) {
            if (t % 2 != 0)
                continue;
            CohomologyGroup h = g1_cohomology_E1(p, static_cast<unsigned>(s), t, M);
            if (!h.decomp.is_zero())
                add_cohomology(c, s, t, h.decomp, sphere_label(p, s, t));
        }
    return c;
}

Chart ko_e2_page(int s_max, int stem_lo, int stem_hi, unsigned M)
{
    const PadicParams P(2, M);
    Chart c(2, 2, s_max, stem_lo, stem_hi);
    for (int s = 0; s <= s_max; ++s)
        for (int t = stem_lo + s; t <= stem_hi + s; ++t) {
            if (t % 2 != 0)
                continue;
            const int j = -t / 2;
            auto module = ZpModuleWithOperator::scalar(P, j % 2 == 0 ? 1 : -1);
            CohomologyGroup h = cyclic_cohomology(2, module, static_cast<unsigned>(s));
            Monomial label = s == 0 ? Monomial{0, 0, 0, 0, 0, j} : Monomial{0, 0, s, 0, 0, s + j};
            add_cohomology(c, s, t, h.decomp, label);
        }
    return c;
}

std::vector<DifferentialRule> sphere_d3_rules()
{
    const Monomial mult{0, 0, 3, 0, 0, 2};
    return {
        DifferentialRule{"d3(eta u^{-2t}) = eta^4 u^{-2t+2}, t odd", 3, 4, 2, 0, 1, mult},
        DifferentialRule{"d3(zeta u^{-2t}) = zeta eta^3 u^{-2t+2}, t odd", 3, 4, 2, 1, 0, mult},
    };
}

std::vector<DifferentialRule> ko_d3_rules()
{
    return {DifferentialRule{"d3(u^{-2}) = eta^3, extended over u^{+-4} and eta", 3, 4, 2, 0, 0,
                             Monomial{0, 0, 3, 0, 0, 2}}};
}

HomotopyTable ko_table(int lo, int hi)
{
    Chart e3 = apply_differentials(ko_e2_page(10, lo - 2, hi + 2), {});
    Chart e4 = apply_differentials(e3, ko_d3_rules());
    return assemble_stems(e4, ExtensionConfig{}, lo, hi);
}

HomotopyTable homotopy_table(unsigned long p, int lo, int hi)
{
    if (p != 2) {
        Chart e2 = e2_page(p, 3, lo - 2, hi + 2);
        for (const auto& [key, cell] : e2.entries())
            if (!cell.empty() && key.first > 1)
                throw ComputationError("odd-p E_2 has a class above s = 1");
        if (!collapse_check(e2, 2))
            throw ComputationError("odd-p E_2 does not collapse");
        return assemble_stems(e2, ExtensionConfig{}, lo, hi);
    }
    Chart e2 = e2_page(2, 10, lo - 2, hi + 2);
    if (!sparse_at(e2, 2))
        throw ComputationError("d_2 not excluded by sparseness");
    Chart e4 = apply_differentials(apply_differentials(e2, {}), sphere_d3_rules());
    return assemble_stems(e4, ExtensionConfig::p2_default(), lo, hi);
}

std::vector<PsiValuationRow> psi_valuation_report(unsigned long p, long t_max)
{
    if (t_max < 1)
        throw UsageError("t_max must be >= 1");
    if (!is_prime(p))
        throw UsageError("p must be prime");
    std::vector<PsiValuationRow> rows;
    rows.reserve(static_cast<std::size_t>(t_max));
    const unsigned long base = p == 2 ? 3 : p + 1;
    const unsigned long step = p == 2 ? 2 : p - 1;
    const unsigned shift = p == 2 ? 3 : 1;
    for (long t = 1; t <= t_max; ++t) {
        mpz_class lambda;
        mpz_ui_pow_ui(lambda.get_mpz_t(), base, static_cast<unsigned long>(t) * step);
        lambda -= 1;
        PsiValuationRow row;
        row.t = t;
        row.valuation = nu_p(lambda, p);
        row.expected = nu_p(mpz_class(t), p) + shift;
        mpz_class pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), p, row.valuation);
        row.cofactor = lambda / pv;
        if (row.valuation != row.expected)
            throw ComputationError("formula violation at t=" + std::to_string(t));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace morava
