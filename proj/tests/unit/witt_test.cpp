#include <gtest/gtest.h>

#include <random>

#include "morava/error.hpp"
#include "morava/random.hpp"
#include "morava/witt.hpp"

using namespace morava;

namespace {

// F_q as polynomials over F_p modulo the Conway polynomial, multiplied naively.
struct NaiveField {
    unsigned long p;
    unsigned n;
    std::vector<long> conway;  // low degree first, monic

    std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const
    {
        std::vector<long> prod(2 * n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                prod[i + j] += static_cast<long>(a[i]) * b[j];
        for (unsigned d = 2 * n - 1; d >= n; --d) {
            const long c = prod[d];
            for (unsigned i = 0; i <= n; ++i)
                prod[d - n + i] -= c * conway[i];
        }
        std::vector<unsigned> out(n);
        const long P = static_cast<long>(p);
        for (unsigned i = 0; i < n; ++i)
            out[i] = static_cast<unsigned>(((prod[i] % P) + P) % P);
        return out;
    }
};

const std::vector<std::pair<unsigned long, unsigned>> kFields = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 2}};

}  // namespace

TEST(Witt, MakeRingExamples)
{
    auto r31 = make_ring(3, 1, 10);
    EXPECT_EQ(r31->omega(), -r31->one());

    auto r32 = make_ring(3, 2, 8);
    EXPECT_TRUE(r32->omega().pow(8).is_one());
    EXPECT_EQ(residue(r32->omega()), r32->residue_field().generator());

    auto r22 = make_ring(2, 2, 8);
    EXPECT_TRUE(r22->omega().pow(3).is_one());
    EXPECT_FALSE(r22->omega().is_one());

    EXPECT_THROW(make_ring(11, 3, 4), UsageError);
    EXPECT_THROW(make_ring(4, 2, 4), UsageError);
}

TEST(Witt, UserSuppliedPolynomial)
{
    // x^2 + x + 2 is primitive over F_3 (the Conway polynomial for F_9).
    auto r = make_ring(3, 2, 6, std::vector<long>{2, 1, 1});
    EXPECT_TRUE(r->omega().pow(8).is_one());
    EXPECT_FALSE(r->omega().pow(4).is_one());
}

TEST(Witt, OmegaHasExactOrder)
{
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 12);
        const unsigned long q = r->q();
        WittElem x = r->one();
        for (unsigned long k = 1; k < q - 1; ++k) {
            x = x * r->omega();
            ASSERT_FALSE(x.is_one()) << "p=" << p << " n=" << n << " k=" << k;
        }
        EXPECT_TRUE((x * r->omega()).is_one());
    }
}

TEST(Witt, ResidueFieldMatchesNaivePolynomialArithmetic)
{
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 2);
        const ResidueField& F = r->residue_field();
        const NaiveField naive{p, n, *conway_polynomial(p, n)};
        // Powers of the generator agree with repeated naive multiplication.
        std::vector<unsigned> g(n, 0), x(n, 0);
        if (n == 1)
            g[0] = F.generator().coeffs[0];
        else
            g[1] = 1;
        EXPECT_EQ(F.generator().coeffs, g);
        x[0] = 1;
        for (unsigned long k = 0; k < F.size(); ++k) {
            ASSERT_EQ(F.pow(F.generator(), k).coeffs, x);
            x = naive.mul(x, g);
        }
        std::mt19937_64 rng(p * 10 + n);
        for (int i = 0; i < 200; ++i) {
            FqElem a = random_fq(F, rng), b = random_fq(F, rng);
            EXPECT_EQ(F.mul(a, b).coeffs, naive.mul(a.coeffs, b.coeffs));
        }
    }
}

TEST(Witt, RingAxiomsOnRandomTriples)
{
    std::mt19937_64 rng(5);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 16);
        for (int i = 0; i < 50; ++i) {
            WittElem a = random_witt(r, rng), b = random_witt(r, rng), c = random_witt(r, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a - a, r->zero());
        }
    }
}

TEST(Witt, FrobeniusProperties)
{
    std::mt19937_64 rng(6);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 16);
        EXPECT_TRUE(frobenius(r->one()).is_one());
        EXPECT_EQ(frobenius(r->omega()), r->omega().pow(p));
        for (int i = 0; i < 100; ++i) {
            WittElem a = random_witt(r, rng), b = random_witt(r, rng);
            EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
            EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
            EXPECT_EQ(frobenius_pow(a, n), a);
            const ResidueField& F = r->residue_field();
            EXPECT_EQ(residue(frobenius(a)), F.frob(residue(a), 1));
        }
    }
}

TEST(Witt, TraceExamples)
{
    auto r1 = make_ring(5, 1, 8);
    std::mt19937_64 rng(7);
    WittElem a = random_witt(r1, rng);
    EXPECT_EQ(trace(a).value(), a.coords()[0]);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 8);
        EXPECT_EQ(trace(r->one()).value(), n);
    }
    auto r22 = make_ring(2, 2, 8);
    const ResidueField& F4 = r22->residue_field();
    EXPECT_EQ(F4.trace(F4.generator()), 1u);
}

TEST(Witt, TraceIsSurjectiveOnResidues)
{
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 2);
        const ResidueField& F = r->residue_field();
        bool found = false;
        for (ResidueField::Code c = 0; c < F.size() && !found; ++c)
            found = F.trace(c) != 0;
        EXPECT_TRUE(found);
    }
}

TEST(Witt, TraceIsGaloisSum)
{
    std::mt19937_64 rng(8);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 16);
        for (int i = 0; i < 30; ++i) {
            WittElem a = random_witt(r, rng), sum = r->zero();
            for (unsigned k = 0; k < n; ++k)
                sum += frobenius_pow(a, k);
            EXPECT_EQ(r->from_int(trace(a).value()), sum);
        }
    }
}

TEST(Witt, TeichmullerAndResidue)
{
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 12);
        const ResidueField& F = r->residue_field();
        EXPECT_TRUE(teichmuller(r, F.zero()).is_zero());
        for (ResidueField::Code c = 0; c < F.size(); ++c) {
            const FqElem x = F.decode(c);
            const WittElem t = teichmuller(r, x);
            EXPECT_EQ(residue(t), x);
            EXPECT_EQ(t.pow(r->q()), t);
        }
        EXPECT_EQ(teichmuller(r, F.generator()), r->omega());
        EXPECT_TRUE(residue(r->one().scaled(p)).coeffs == F.zero().coeffs);
        EXPECT_EQ(residue(r->one() + r->omega().scaled(p)), F.one());
    }
    auto r31 = make_ring(3, 1, 10);
    EXPECT_EQ(teichmuller(r31, FqElem{{2}}), -r31->one());
}

TEST(Witt, TeichDigits)
{
    auto r31 = make_ring(3, 1, 8);
    auto d = teich_digits(r31->from_int(2), 4);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(d[0].coeffs, std::vector<unsigned>{2});
    EXPECT_EQ(d[1].coeffs, std::vector<unsigned>{1});
    // 2 = -1 + 3 * 1 in Z_3.
    EXPECT_EQ(d[2].coeffs, std::vector<unsigned>{0});
    EXPECT_EQ(d[3].coeffs, std::vector<unsigned>{0});

    std::mt19937_64 rng(9);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 10);
        const ResidueField& F = r->residue_field();
        auto dp = teich_digits(r->from_int(p), 3);
        EXPECT_EQ(dp[0], F.zero());
        EXPECT_EQ(dp[1], F.one());
        EXPECT_EQ(dp[2], F.zero());
        auto dw = teich_digits(r->omega(), 3);
        EXPECT_EQ(dw[0], F.generator());
        EXPECT_EQ(dw[1], F.zero());
        for (int i = 0; i < 20; ++i) {
            WittElem w = random_witt(r, rng), back = r->zero();
            auto digits = teich_digits(w, r->precision());
            for (unsigned j = digits.size(); j-- > 0;)
                back = back.scaled(p) + teichmuller(r, digits[j]);
            EXPECT_EQ(back, w);
        }
    }
}

TEST(Witt, UnitInverse)
{
    std::mt19937_64 rng(10);
    for (auto [p, n] : kFields) {
        auto r = make_ring(p, n, 16);
        for (int i = 0; i < 20; ++i) {
            WittElem u = random_witt_unit(r, rng);
            EXPECT_TRUE((u * witt_unit_inverse(u)).is_one());
        }
        EXPECT_THROW(witt_unit_inverse(r->from_int(p)), ComputationError);
    }
}
