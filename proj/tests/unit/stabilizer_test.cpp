#include <gtest/gtest.h>

#include <random>

#include "morava/error.hpp"
#include "morava/random.hpp"
#include "morava/stabilizer.hpp"

using namespace morava;

namespace {

StabElem one_plus(const WittRingPtr& r, const WittElem& a, unsigned k)
{
    return StabElem(OrderElem::one(r) + OrderElem::from_witt(a) * OrderElem::uniformizer(r).pow(k));
}

// Strict unit with x - 1 of valuation >= k/n.
StabElem random_at_level(const WittRingPtr& r, unsigned k, std::mt19937_64& rng)
{
    OrderElem y = random_order(r, rng) * OrderElem::uniformizer(r).pow(k);
    return StabElem(OrderElem::one(r) + y);
}

}  // namespace

TEST(Stabilizer, ConstructionRequiresUnit)
{
    auto r = make_ring(3, 2, 8);
    EXPECT_THROW(StabElem(OrderElem::uniformizer(r)), ComputationError);
    EXPECT_TRUE(StabElem::one(r).strict());
    EXPECT_FALSE(StabElem(OrderElem::from_witt(r->omega())).strict());
}

TEST(Stabilizer, CommutatorTrivialCases)
{
    std::mt19937_64 rng(20);
    auto r = make_ring(3, 2, 16);
    for (int i = 0; i < 20; ++i) {
        StabElem x = random_unit(r, rng);
        EXPECT_TRUE(commutator(x, x).is_one());
        EXPECT_TRUE(commutator(x, StabElem::one(r)).is_one());
    }
}

TEST(Stabilizer, OrderThreeElementCommutators)
{
    auto r = make_ring(3, 2, 16);
    const StabElem a = order3_element(r);
    const StabElem w(OrderElem::from_witt(r->omega()));
    const StabElem b = commutator(a, w);
    const StabElem c = commutator(a, b);
    EXPECT_FALSE(b.is_one());
    EXPECT_FALSE(c.is_one());
    EXPECT_EQ(filtration_level(b), (SValuation{1, 2, false}));
    EXPECT_GE(filtration_level(c).numerator, 2u);
    EXPECT_TRUE(in_K(b));
    EXPECT_FALSE(in_K(a));
    EXPECT_TRUE(in_K(StabElem::one(r)));
}

TEST(Stabilizer, FiltrationLevelExamples)
{
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 3}}) {
        auto r = make_ring(p, n, 12);
        EXPECT_EQ(filtration_level(one_plus(r, r->omega(), 1)), (SValuation{1, n, false}));
        EXPECT_EQ(filtration_level(StabElem(OrderElem::one(r) + OrderElem::from_witt(r->omega().scaled(p)))),
                  (SValuation{n, n, false}));
        if (p == 2) {
            const StabElem minus_one(OrderElem::from_int(r, -1));
            EXPECT_EQ(minus_one, StabElem(OrderElem::one(r) - OrderElem::uniformizer(r).pow(n)));
            EXPECT_EQ(filtration_level(minus_one), (SValuation{n, n, false}));
        }
    }
}

TEST(Stabilizer, FiltrationIsMultiplicativeAndCommutatorsRaiseLevel)
{
    std::mt19937_64 rng(21);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        auto r = make_ring(p, n, 12);
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned l = 1; l <= 3; ++l)
                for (int i = 0; i < 10; ++i) {
                    StabElem x = random_at_level(r, k, rng), y = random_at_level(r, l, rng);
                    EXPECT_GE(filtration_level(x * y).numerator, std::min(k, l));
                    EXPECT_GE(filtration_level(x.inverse()).numerator, k);
                    EXPECT_GE(filtration_level(commutator(x, y)).numerator, k + l);
                }
    }
}

TEST(Stabilizer, GrProject)
{
    std::mt19937_64 rng(22);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        auto r = make_ring(p, n, 12);
        const ResidueField& F = r->residue_field();
        EXPECT_EQ(gr_project(one_plus(r, r->omega(), 1)), (GrElem{1, n, F.generator()}));
        EXPECT_THROW(gr_project(StabElem::one(r)), ComputationError);
        for (unsigned k = 1; k <= 4; ++k)
            for (int i = 0; i < 10; ++i) {
                FqElem a = random_fq(F, rng, true), b = random_fq(F, rng, true);
                StabElem x = one_plus(r, teichmuller(r, a), k), y = one_plus(r, teichmuller(r, b), k);
                const FqElem sum = F.add(a, b);
                if (F.encode(sum) == 0)
                    continue;
                EXPECT_EQ(gr_project(x * y), (GrElem{k, n, sum}));
            }
    }
}

TEST(Stabilizer, OrderThreeElement)
{
    auto r = make_ring(3, 2, 16);
    const StabElem a = order3_element(r);
    EXPECT_EQ(element_order(a, 100), std::optional<unsigned long>(3));
    EXPECT_FALSE(a.is_one());
    EXPECT_FALSE((a * a).is_one());
    EXPECT_EQ(gr_project(a), (GrElem{1, 2, r->residue_field().generator()}));
    EXPECT_THROW(order3_element(make_ring(5, 2, 8)), UsageError);
}

TEST(Stabilizer, ElementOrderExamples)
{
    for (unsigned n = 1; n <= 4; ++n) {
        auto r = make_ring(2, n, 16);
        EXPECT_EQ(element_order(StabElem(OrderElem::from_int(r, -1)), 100), std::optional<unsigned long>(2));
    }
    auto r52 = make_ring(5, 2, 16);
    EXPECT_EQ(element_order(one_plus(r52, r52->omega(), 1), 24), std::nullopt);
    EXPECT_EQ(element_order(StabElem(OrderElem::from_witt(r52->omega())), 100), std::optional<unsigned long>(24));
    EXPECT_EQ(default_order_bound(r52), 1000u);
    EXPECT_EQ(default_order_bound(make_ring(3, 1, 2)), 6u);
}

TEST(Stabilizer, TorsionFreeAboveCriticalLevel)
{
    // For (p - 1) not dividing n, no nontrivial element above level 1/(p-1) has finite order.
    std::mt19937_64 rng(23);
    for (auto [p, n, k0] : std::vector<std::tuple<unsigned long, unsigned, unsigned>>{{5, 2, 1}, {3, 3, 2}, {7, 2, 1}}) {
        auto r = make_ring(p, n, 16);
        for (unsigned k = k0; k < k0 + 3; ++k)
            for (int i = 0; i < 5; ++i) {
                StabElem x = random_at_level(r, k, rng);
                if (!x.is_one())
                    EXPECT_EQ(element_order(x, 200), std::nullopt);
            }
    }
}

TEST(Stabilizer, TorusEmbed)
{
    std::mt19937_64 rng(24);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {3, 2}, {5, 3}}) {
        auto r = make_ring(p, n, 12);
        const ResidueField& F = r->residue_field();
        EXPECT_TRUE(torus_embed(r, F.one()).is_one());
        EXPECT_THROW(torus_embed(r, F.zero()), ComputationError);
        for (int i = 0; i < 20; ++i) {
            FqElem a = random_fq(F, rng, true), b = random_fq(F, rng, true);
            EXPECT_TRUE(torus_embed(r, a).pow(r->q() - 1).is_one());
            EXPECT_EQ(torus_embed(r, a) * torus_embed(r, b), torus_embed(r, F.mul(a, b)));
        }
    }
}

TEST(Stabilizer, ReducedNormExamples)
{
    auto r = make_ring(3, 2, 16);
    EXPECT_EQ(reduced_norm(OrderElem::uniformizer(r)), r->from_int(-3));
    EXPECT_EQ(reduced_norm_value(OrderElem::from_int(r, 4)).value(), 16);
    EXPECT_EQ(reduced_norm_value(order3_element(r).value()).value(), 1);

    std::mt19937_64 rng(25);
    for (int i = 0; i < 100; ++i) {
        WittElem a = random_witt(r, rng), b = random_witt(r, rng);
        OrderElem x(r, {a, b});
        EXPECT_EQ(reduced_norm(x), a * frobenius(a) - (b * frobenius(b)).scaled(3));
    }
}

TEST(Stabilizer, ReducedNormProperties)
{
    std::mt19937_64 rng(26);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {2, 3}, {3, 3}, {5, 2}, {2, 4}}) {
        auto r = make_ring(p, n, 12);
        for (int i = 0; i < 30; ++i) {
            OrderElem x = random_order(r, rng), y = random_order(r, rng);
            EXPECT_EQ(reduced_norm(x * y), reduced_norm(x) * reduced_norm(y));
            EXPECT_EQ(reduced_norm(galois_sigma(x)), reduced_norm(x));
            PadicInt z = random_central(r->params(), rng);
            EXPECT_EQ(reduced_norm_value(OrderElem::from_int(r, z.value())), z.pow(n));
        }
    }
}

TEST(Stabilizer, SplittingExamples)
{
    auto r = make_ring(3, 2, 16);
    S1Split central = s1_split(StabElem(OrderElem::from_int(r, 4)));
    EXPECT_TRUE(central.x1.is_one());
    EXPECT_EQ(central.z.value(), 4);
    S1Split sa = s1_split(order3_element(r));
    EXPECT_EQ(sa.z.value(), 1);
    EXPECT_EQ(sa.x1, order3_element(r));
    EXPECT_THROW(s1_split(StabElem::one(make_ring(2, 2, 8))), ComputationError);
}

TEST(Stabilizer, SplittingIsDirectProduct)
{
    std::mt19937_64 rng(27);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{3, 2}, {5, 2}, {2, 3}, {2, 1}, {3, 1}}) {
        auto r = make_ring(p, n, 12);
        for (int i = 0; i < 20; ++i) {
            StabElem x = random_strict_unit(r, rng), y = random_strict_unit(r, rng);
            S1Split sx = s1_split(x), sy = s1_split(y), sxy = s1_split(x * y);
            EXPECT_EQ(sx.x1.value().left_scaled(r->from_int(sx.z.value())), x.value());
            EXPECT_EQ(reduced_norm_value(sx.x1.value()).value(), 1);
            EXPECT_EQ(sxy.z, sx.z * sy.z);
            EXPECT_EQ(sxy.x1, sx.x1 * sy.x1);
        }
    }
}

TEST(Stabilizer, InKPreconditions)
{
    auto r = make_ring(3, 2, 16);
    EXPECT_THROW(in_K(StabElem(OrderElem::from_int(r, 4))), ComputationError);
    EXPECT_THROW(in_K(StabElem::one(make_ring(5, 2, 8))), UsageError);
}
