#include "morava/homalg.hpp"

#include "morava/witt.hpp"

namespace morava {

namespace {

ZpMatrix minus_identity(const ZpMatrix& g, const PadicParams& P)
{
    ZpMatrix out = g;
    for (std::size_t i = 0; i < g.rows(); ++i)
        out.at(i, i) -= 1;
    return out.reduced(P);
}

std::vector<std::string> make_labels(const std::string& base, const CyclicDecomp& d)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d.num_summands(); ++i)
        out.push_back(d.num_summands() == 1 ? base : base + "#" + std::to_string(i));
    return out;
}

CohomologyGroup labelled(const std::string& base, const CyclicDecomp& d)
{
    return CohomologyGroup{d, make_labels(base, d)};
}

}  // namespace

ZpModuleWithOperator::ZpModuleWithOperator(PadicParams p, ZpMatrix o) : params(std::move(p)), op(std::move(o))
{
    if (op.rows() != op.cols())
        throw UsageError("operator must be square");
    op = op.reduced(params);
}

ZpModuleWithOperator ZpModuleWithOperator::scalar(const PadicParams& params, const mpz_class& lambda)
{
    ZpMatrix m(1, 1);
    m.at(0, 0) = lambda;
    return ZpModuleWithOperator(params, m);
}

std::pair<CohomologyGroup, CohomologyGroup> iwasawa_cohomology(const ZpModuleWithOperator& m)
{
    SmithForm snf = smith_normal_form(minus_identity(m.op, m.params), m.params);
    return {labelled("ker(g-1)", kernel_decomp(snf, m.params)),
            labelled("coker(g-1)", cokernel_decomp(snf, m.params))};
}

CyclicDecomp subquotient(const ZpMatrix& A, const ZpMatrix& B, const PadicParams& P)
{
    if (A.cols() != B.rows())
        throw UsageError("subquotient: maps are not composable");
    SmithForm snf = smith_normal_form(A, P);
    const std::size_t n = A.cols();
    std::vector<std::size_t> K;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= snf.exponents.size() || snf.exponents[j] >= P.precision())
            K.push_back(j);
    if (K.empty())
        return CyclicDecomp(P.p());
    ZpMatrix coords = snf.V_inv.mul(B, P);
    ZpMatrix restricted(K.size(), B.cols());
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t c = 0; c < B.cols(); ++c)
            restricted.at(i, c) = coords.at(K[i], c);
    return cokernel_decomp(smith_normal_form(restricted, P), P);
}

CohomologyGroup cyclic_cohomology(unsigned order, const ZpModuleWithOperator& m, unsigned s)
{
    if (order < 1)
        throw UsageError("group order must be >= 1");
    const PadicParams& P = m.params;
    const std::size_t r = m.rank();
    ZpMatrix power = ZpMatrix::identity(r);
    ZpMatrix norm(r, r);
    for (unsigned i = 0; i < order; ++i) {
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                norm.at(a, b) += power.at(a, b);
        power = power.mul(m.op, P);
    }
    norm = norm.reduced(P);
    if (!(power == ZpMatrix::identity(r).reduced(P)))
        throw ComputationError("not a valid action: g^m != 1");
    const ZpMatrix gm1 = minus_identity(m.op, P);
    if (s == 0)
        return labelled("H^0=ker(g-1)", subquotient(gm1, ZpMatrix(r, 0), P));
    if (s % 2 == 1)
        return labelled("H^" + std::to_string(s) + "=ker(N)/im(g-1)", subquotient(norm, gm1, P));
    return labelled("H^" + std::to_string(s) + "=ker(g-1)/im(N)", subquotient(gm1, norm, P));
}

G1Cohomology g1_cohomology_E1_detailed(unsigned long p, unsigned s, long t, unsigned M)
{
    const PadicParams P(p, M);
    G1Cohomology out{{CyclicDecomp(p), {}}, CyclicDecomp(p), CyclicDecomp(p), false};
    if (t % 2 != 0)
        return out;
    const long j = -t / 2;  // (E_1)_t = Z_p u^j

    // Generator of the finite subgroup F and of the pro-cyclic quotient.
    mpz_class g;
    unsigned order;
    if (p == 2) {
        g = -1;
        order = 2;
    } else {
        g = make_ring(p, 1, M)->omega().coords()[0];
        order = static_cast<unsigned>(p - 1);
    }
    const mpz_class psi = p == 2 ? 3 : p + 1;
    const auto F_mod = ZpModuleWithOperator::scalar(P, PadicInt(P, g).pow(j).value());
    const auto psi_mod = ZpModuleWithOperator::scalar(P, PadicInt(P, psi).pow(j).value());
    const std::string tag = "(F;u^" + std::to_string(j) + ")";

    auto h0_invariant = cyclic_cohomology(order, F_mod, 0).decomp.free_rank() == 1;

    // coker(psi - 1) on H^{s-1}(F)
    if (s >= 1) {
        if (s == 1) {
            if (h0_invariant)
                out.from_coker = iwasawa_cohomology(psi_mod).second.decomp;
        } else {
            // psi acts trivially on H^{s-1}(F) for s - 1 > 0.
            out.from_coker = cyclic_cohomology(order, F_mod, s - 1).decomp;
        }
    }
    // ker(psi - 1) on H^s(F)
    if (s == 0) {
        if (h0_invariant)
            out.from_ker = iwasawa_cohomology(psi_mod).first.decomp;
    } else {
        out.from_ker = cyclic_cohomology(order, F_mod, s).decomp;
    }

    out.split_assumed = !out.from_coker.is_zero() && !out.from_ker.is_zero();
    out.group.decomp = out.from_coker.direct_sum(out.from_ker);
    // Labels follow the normalized factor order of the direct sum.
    for (const auto& f : out.group.decomp.factors()) {
        bool in_coker = false;
        for (const auto& c : out.from_coker.factors())
            if (c == f)
                in_coker = true;
        out.group.labels.push_back(in_coker ? "coker(psi-1)|H^" + std::to_string(s - 1) + tag
                                            : "ker(psi-1)|H^" + std::to_string(s) + tag);
    }
    return out;
}

CohomologyGroup g1_cohomology_E1(unsigned long p, unsigned s, long t, unsigned M)
{
    return g1_cohomology_E1_detailed(p, s, t, M).group;
}

}  // namespace morava
