#pragma once

#include <map>
#include <vector>

#include "morava/homalg.hpp"
#include "morava/specseq.hpp"

namespace morava {

using HomotopyTable = std::map<int, StemEntry>;

// E_2 = H^s(G_1, (E_1)_t) over stems [stem_lo, stem_hi], rows 0..s_max.
Chart e2_page(unsigned long p, int s_max, int stem_lo, int stem_hi, unsigned M = kDefaultPrecision);
// E_2 = H^s(C_2, Z_2[u^{+-1}]) for KO Z_2.
Chart ko_e2_page(int s_max, int stem_lo, int stem_hi, unsigned M = kDefaultPrecision);

// d_3 families at p = 2: eta u^{-2t} and zeta u^{-2t}, t odd (u-exponent 2 mod 4).
std::vector<DifferentialRule> sphere_d3_rules();
// d_3(u^{-2k}) = eta^3 u^{-2k+2}, k odd, extended over eta.
std::vector<DifferentialRule> ko_d3_rules();

HomotopyTable ko_table(int lo, int hi);
HomotopyTable homotopy_table(unsigned long p, int lo, int hi);

struct PsiValuationRow {
    long t = 0;
    unsigned valuation = 0;
    unsigned expected = 0;
    mpz_class cofactor;  // (psi^{...} - 1) / p^valuation
};

// Exact valuations of (p+1)^{t(p-1)} - 1 (p odd) or 3^{2t} - 1 (p = 2) against
// nu_p(t) + 1 resp. nu_2(t) + 3.  Throws ComputationError on a mismatch.
std::vector<PsiValuationRow> psi_valuation_report(unsigned long p, long t_max);

}  // namespace morava
