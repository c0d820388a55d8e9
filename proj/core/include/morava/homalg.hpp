#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morava/padic.hpp"

namespace morava {

// Free Z_p-module of finite rank with the action of one group element.
struct ZpModuleWithOperator {
    PadicParams params;
    ZpMatrix op;

    ZpModuleWithOperator(PadicParams params, ZpMatrix op);
    static ZpModuleWithOperator scalar(const PadicParams& params, const mpz_class& lambda);

    std::size_t rank() const { return op.rows(); }
};

struct CohomologyGroup {
    CyclicDecomp decomp;
    std::vector<std::string> labels;  // one per summand of decomp
};

// H^0 = ker(op - 1), H^1 = coker(op - 1): cohomology of Z_p via its Iwasawa resolution.
std::pair<CohomologyGroup, CohomologyGroup> iwasawa_cohomology(const ZpModuleWithOperator& m);

// H^s of the cyclic group of order `order` generated by m.op, via the
// 2-periodic resolution.
CohomologyGroup cyclic_cohomology(unsigned order, const ZpModuleWithOperator& m, unsigned s);

// ker(A) / im(B) for composable maps with A B = 0.
CyclicDecomp subquotient(const ZpMatrix& A, const ZpMatrix& B, const PadicParams& params);

// H^s(G_1, (E_1)_t) from H^s(F) with F = C_{p-1} (p odd) or C_2 (p = 2) and
// the exact sequence for psi - 1, psi = p + 1 (p odd) or 3 (p = 2).
struct G1Cohomology {
    CohomologyGroup group;
    CyclicDecomp from_coker;  // coker(psi - 1) on H^{s-1}(F)
    CyclicDecomp from_ker;    // ker(psi - 1) on H^s(F)
    bool split_assumed = false;  // both pieces nonzero; direct sum taken
};

G1Cohomology g1_cohomology_E1_detailed(unsigned long p, unsigned s, long t, unsigned M = kDefaultPrecision);
CohomologyGroup g1_cohomology_E1(unsigned long p, unsigned s, long t, unsigned M = kDefaultPrecision);

}  // namespace morava
