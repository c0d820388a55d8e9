#include <gtest/gtest.h>

#include <set>

#include "morava/error.hpp"
#include "morava/grlie.hpp"

using namespace morava;

namespace {

using Code = ResidueField::Code;

// Rank over F_p of a set of coordinate vectors, by plain Gaussian elimination.
std::size_t rank_mod_p(std::vector<std::vector<long>> rows, long p)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] % p == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        long inv = 1;
        while ((rows[rank][c] * inv) % p != 1)
            ++inv;
        for (auto& v : rows[rank])
            v = (v * inv) % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] % p == 0)
                continue;
            const long f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] = (((rows[r][j] - f * rows[rank][j]) % p) + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST(GrLie, PhiLevel)
{
    EXPECT_EQ(phi_level(1, 2, 2), 2u);
    EXPECT_EQ(phi_level(1, 2, 3), 3u);
    EXPECT_EQ(phi_level(1, 2, 5), 3u);
    EXPECT_EQ(phi_level(2, 2, 2), 4u);
}

TEST(GrLie, BracketExamples)
{
    auto r = make_ring(2, 2, 1);
    const ResidueField& F = r->residue_field();
    const GrElem a{1, 2, F.one()}, b{1, 2, F.generator()};
    EXPECT_EQ(gr_bracket(F, a, b), (GrElem{2, 2, F.one()}));
    for (Code c = 0; c < F.size(); ++c) {
        const GrElem x{1, 2, F.decode(c)};
        EXPECT_EQ(gr_bracket(F, x, x).residue, F.zero());
        EXPECT_EQ(gr_bracket(F, GrElem{1, 2, F.zero()}, x).residue, F.zero());
    }
    auto r9 = make_ring(3, 2, 1);
    const ResidueField& F9 = r9->residue_field();
    for (Code x = 0; x < F9.size(); ++x)
        for (Code y = 0; y < F9.size(); ++y) {
            const GrElem gx{3, 2, F9.decode(x)}, gy{3, 2, F9.decode(y)};
            EXPECT_EQ(gr_bracket(F9, gx, gy).residue, F9.sub(F9.zero(), gr_bracket(F9, gy, gx).residue));
        }
}

TEST(GrLie, PowerExamples)
{
    auto r32 = make_ring(3, 2, 1);
    const ResidueField& F9 = r32->residue_field();
    for (Code c = 1; c < F9.size(); ++c) {
        const FqElem a = F9.decode(c);
        EXPECT_EQ(gr_power(F9, GrElem{1, 2, a}), (GrElem{3, 2, F9.add(a, F9.pow(a, 13))}));
    }
    auto r52 = make_ring(5, 2, 1);
    const ResidueField& F25 = r52->residue_field();
    const FqElem g = F25.generator();
    EXPECT_EQ(gr_power(F25, GrElem{1, 2, g}), (GrElem{3, 2, g}));
    auto r22 = make_ring(2, 2, 1);
    const ResidueField& F4 = r22->residue_field();
    for (Code c = 1; c < F4.size(); ++c) {
        const FqElem a = F4.decode(c);
        EXPECT_EQ(gr_power(F4, GrElem{1, 2, a}), (GrElem{2, 2, F4.pow(a, 3)}));
    }
}

TEST(GrLie, GroupChecksMatch)
{
    auto r32 = make_ring(3, 2, 16);
    EXPECT_TRUE(check_bracket_vs_group(r32, 1, 2, 50).ok());
    EXPECT_TRUE(check_power_vs_group(r32, 1, 50).ok());
    auto r23 = make_ring(2, 3, 16);
    EXPECT_TRUE(check_bracket_vs_group(r23, 1, 1, 50).ok());
    auto r52 = make_ring(5, 2, 16);
    auto rep = check_power_vs_group(r52, 1, 50);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.trials, 50u);
    EXPECT_THROW(check_bracket_vs_group(make_ring(3, 2, 2), 2, 2, 5), UsageError);
}

TEST(GrLie, SubspaceBasics)
{
    auto r = make_ring(3, 3, 1);
    const ResidueField& F = r->residue_field();
    GrSubspace s(3, 3);
    EXPECT_EQ(s.dim(), 0u);
    EXPECT_TRUE(s.insert(F.one()));
    EXPECT_FALSE(s.insert(F.from_int(2)));
    EXPECT_TRUE(s.insert(F.generator()));
    EXPECT_TRUE(s.contains(F.add(F.one(), F.generator())));
    EXPECT_FALSE(s.contains(F.mul(F.generator(), F.generator())));
    EXPECT_TRUE(s.is_subspace_of(GrSubspace::full(F)));
    EXPECT_EQ(GrSubspace::full(F).dim(), 3u);
    EXPECT_EQ(GrSubspace::trace_kernel(F).dim(), 2u);
    const GrSubspace ker = GrSubspace::trace_kernel(F);
    for (const auto& v : ker.basis())
        EXPECT_EQ(F.trace(v), 0u);
}

TEST(GrLie, SpanOfF4ByEnumeration)
{
    auto r = make_ring(2, 2, 1);
    const ResidueField& F = r->residue_field();
    std::set<Code> values;
    for (Code a = 0; a < 4; ++a)
        for (Code b = 0; b < 4; ++b) {
            // a b^2 - b a^2 over F_4
            values.insert(F.sub(F.mul(a, F.pow(b, 2)), F.mul(b, F.pow(a, 2))));
        }
    EXPECT_EQ(values, (std::set<Code>{0, F.encode(F.one())}));
    GrSubspace span = commutator_span(2, 2, 1, 1);
    EXPECT_EQ(span.dim(), 1u);
    EXPECT_TRUE(span.contains(F.one()));
    EXPECT_EQ(span, GrSubspace::trace_kernel(F));
}

TEST(GrLie, SpanDimensionsAgainstIndependentRank)
{
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        auto r = make_ring(p, n, 1);
        const ResidueField& F = r->residue_field();
        for (unsigned k = 1; k <= 2 * n + 1; ++k)
            for (unsigned l = 1; l <= 3; ++l) {
                std::vector<std::vector<long>> rows;
                for (Code a = 0; a < F.size(); ++a)
                    for (Code b = 0; b < F.size(); ++b) {
                        const Code v = F.sub(F.mul(a, F.frob(b, k)), F.mul(b, F.frob(a, l)));
                        const FqElem e = F.decode(v);
                        rows.emplace_back(e.coeffs.begin(), e.coeffs.end());
                    }
                EXPECT_EQ(commutator_span(F, k, l).dim(), rank_mod_p(rows, static_cast<long>(p)))
                    << "p=" << p << " n=" << n << " k=" << k << " l=" << l;
            }
    }
}

TEST(GrLie, CommutatorLemma)
{
    for (unsigned long p : {2ul, 3ul, 5ul})
        for (unsigned n : {2u, 3u}) {
            auto r = make_ring(p, n, 1);
            const ResidueField& F = r->residue_field();
            const GrSubspace ker = GrSubspace::trace_kernel(F);
            for (unsigned k = 1; k <= 4 * n; ++k) {
                const GrSubspace s = commutator_span(F, k, 1);
                EXPECT_EQ(s, (k + 1) % n == 0 ? ker : GrSubspace::full(F));
                for (unsigned l = 2; l <= 4 * n; ++l)
                    if ((k + l) % n == 0)
                        EXPECT_TRUE(commutator_span(F, k, l).is_subspace_of(ker));
            }
        }
}

TEST(GrLie, SpanRangeGuard)
{
    EXPECT_THROW(commutator_span(257, 2, 1, 1), ComputationError);
    EXPECT_THROW(commutator_span(2, 17, 1, 1), ComputationError);
    EXPECT_EQ(commutator_span(7, 4, 1, 1).dim(), 4u);
}

TEST(GrLie, AbelianizationExamples)
{
    auto r32 = abelianization_report(3, 2, 8);
    EXPECT_EQ(r32.assembled.to_string(), "Z_3 + (Z/3)^2");
    EXPECT_EQ(r32.mod_p.to_string(), "(Z/3)^3");
    EXPECT_TRUE(r32.assembled.precision_caveat());
    auto r22 = abelianization_report(2, 2, 10);
    EXPECT_EQ(r22.assembled.to_string(), "Z_2 + (Z/2)^3");
    EXPECT_EQ(r22.mod_p.to_string(), "(Z/2)^4");
}

TEST(GrLie, AbelianizationLevelStructure)
{
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        const unsigned L = 4 * n;
        auto rep = abelianization_report(p, n, L);
        ASSERT_EQ(rep.levels.size(), L);
        EXPECT_EQ(rep.levels[0].dim_quotient(), n);
        for (unsigned k = 2; k <= L; ++k)
            EXPECT_EQ(rep.levels[k - 1].dim_quotient(), k % n == 0 ? 1u : 0u) << "k=" << k;
        // P is zero on Q_{1/n} and an isomorphism between consecutive integer levels,
        // except at p = 2 where squaring sends level 1 to tr(a + a^2) = 0.
        for (const auto& row : rep.levels[0].p_matrix)
            for (unsigned v : row)
                EXPECT_EQ(v, 0u);
        for (unsigned k = n; k + n <= L; k += n) {
            const auto& ld = rep.levels[k - 1];
            EXPECT_EQ(ld.p_target, k + n);
            ASSERT_EQ(ld.p_matrix.size(), 1u);
            if (p == 2 && k == n)
                EXPECT_EQ(ld.p_matrix[0][0], 0u) << "n=" << n;
            else
                EXPECT_NE(ld.p_matrix[0][0], 0u) << "p=" << p << " n=" << n << " k=" << k;
        }
    }
}
