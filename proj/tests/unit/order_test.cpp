#include <gtest/gtest.h>

#include <random>

#include "morava/error.hpp"
#include "morava/order.hpp"
#include "morava/random.hpp"

using namespace morava;

namespace {

const std::vector<std::pair<unsigned long, unsigned>> kRings = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

OrderElem s_power_times(const WittRingPtr& r, const WittElem& w, unsigned k)
{
    return OrderElem::from_witt(w) * OrderElem::uniformizer(r).pow(k);
}

}  // namespace

TEST(Order, DefiningRelations)
{
    auto r = make_ring(3, 2, 16);
    const OrderElem S = OrderElem::uniformizer(r);
    const OrderElem w = OrderElem::from_witt(r->omega());
    const OrderElem Sw = S * w;
    EXPECT_TRUE(Sw.coeff(0).is_zero());
    EXPECT_EQ(Sw.coeff(1), r->omega().pow(3));
    EXPECT_EQ(S.pow(2), OrderElem::from_int(r, 3));
    for (auto [p, n] : kRings) {
        auto rr = make_ring(p, n, 8);
        EXPECT_EQ(OrderElem::uniformizer(rr).pow(n), OrderElem::from_int(rr, p));
    }
}

TEST(Order, MultiplicationAgreesWithTermwiseRule)
{
    // (a S^i)(b S^j) = a sigma^i(b) S^{i+j}
    std::mt19937_64 rng(11);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 12);
        for (int trial = 0; trial < 20; ++trial) {
            WittElem a = random_witt(r, rng), b = random_witt(r, rng);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    OrderElem lhs = s_power_times(r, a, i) * s_power_times(r, b, j);
                    EXPECT_EQ(lhs, s_power_times(r, a * frobenius_pow(b, i), i + j));
                }
        }
    }
}

TEST(Order, RingAxioms)
{
    std::mt19937_64 rng(12);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 12);
        const OrderElem one = OrderElem::one(r);
        for (int i = 0; i < 30; ++i) {
            OrderElem x = random_order(r, rng), y = random_order(r, rng), z = random_order(r, rng);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ((y + z) * x, y * x + z * x);
            EXPECT_EQ(one * x, x);
            EXPECT_EQ(x * one, x);
        }
    }
}

TEST(Order, ValuationExamples)
{
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 8);
        EXPECT_EQ(s_valuation(OrderElem::uniformizer(r)), (SValuation{1, n, false}));
        EXPECT_EQ(s_valuation(OrderElem::from_int(r, p)), (SValuation{n, n, false}));
        EXPECT_EQ(s_valuation(OrderElem::from_witt(r->omega())), (SValuation{0, n, false}));
        EXPECT_TRUE(s_valuation(OrderElem(r)).zero_at_precision);
    }
}

TEST(Order, ValuationIsAdditive)
{
    std::mt19937_64 rng(13);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 10);
        for (int i = 0; i < 50; ++i) {
            std::uniform_int_distribution<unsigned> shift(0, 2 * n);
            OrderElem x = random_unit(r, rng).value() * OrderElem::uniformizer(r).pow(shift(rng));
            OrderElem y = random_order(r, rng) * OrderElem::uniformizer(r).pow(shift(rng));
            SValuation vx = s_valuation(x), vy = s_valuation(y), vxy = s_valuation(x * y);
            if (vx.zero_at_precision || vy.zero_at_precision || vx.numerator + vy.numerator >= n * r->precision())
                continue;
            EXPECT_EQ(vxy.numerator, vx.numerator + vy.numerator);
        }
    }
}

TEST(Order, Inverse)
{
    auto r = make_ring(3, 2, 8);
    const OrderElem one = OrderElem::one(r);
    EXPECT_EQ(unit_inverse_order(one), one);
    const OrderElem x = one - OrderElem::from_witt(r->omega()) * OrderElem::uniformizer(r);
    EXPECT_TRUE((x * unit_inverse_order(x)).is_one());
    EXPECT_TRUE((unit_inverse_order(x) * x).is_one());
    const OrderElem w = OrderElem::from_witt(r->omega());
    EXPECT_EQ(unit_inverse_order(w), OrderElem::from_witt(r->omega_pow(static_cast<long>(r->q()) - 2)));
}

TEST(Order, InvertibleIffValuationZero)
{
    std::mt19937_64 rng(14);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 10);
        for (unsigned k = 0; k < 2 * n; ++k) {
            for (int i = 0; i < 5; ++i) {
                OrderElem x = random_unit(r, rng).value() * OrderElem::uniformizer(r).pow(k);
                if (k == 0) {
                    OrderElem y = unit_inverse_order(x);
                    EXPECT_TRUE((x * y).is_one());
                    EXPECT_TRUE((y * x).is_one());
                } else {
                    EXPECT_THROW(unit_inverse_order(x), ComputationError);
                }
            }
        }
    }
}

TEST(Order, SDigits)
{
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 8);
        const ResidueField& F = r->residue_field();
        auto ds = s_digits(OrderElem::uniformizer(r), 3);
        if (n > 1) {
            EXPECT_EQ(ds[0], F.zero());
            EXPECT_EQ(ds[1], F.one());
        }
        auto dp = s_digits(OrderElem::from_int(r, p), 2 * n);
        for (unsigned j = 0; j < 2 * n; ++j)
            EXPECT_EQ(dp[j], j == n ? F.one() : F.zero());
    }
    std::mt19937_64 rng(15);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 6);
        const OrderElem S = OrderElem::uniformizer(r);
        for (int i = 0; i < 10; ++i) {
            OrderElem x = random_order(r, rng), back(r);
            const unsigned count = n * r->precision();
            auto digits = s_digits(x, count);
            for (unsigned j = count; j-- > 0;)
                back = back * S + OrderElem::from_witt(teichmuller(r, digits[j]));
            EXPECT_EQ(back, x);
        }
    }
}

TEST(Order, GaloisSigma)
{
    std::mt19937_64 rng(16);
    for (auto [p, n] : kRings) {
        auto r = make_ring(p, n, 12);
        const OrderElem S = OrderElem::uniformizer(r);
        EXPECT_EQ(galois_sigma(S), S);
        EXPECT_EQ(galois_sigma(OrderElem::from_witt(r->omega())), OrderElem::from_witt(r->omega().pow(p)));
        for (int i = 0; i < 100; ++i) {
            OrderElem x = random_order(r, rng), y = random_order(r, rng);
            EXPECT_EQ(S * x - galois_sigma(x) * S, OrderElem(r));
            EXPECT_EQ(galois_sigma(x * y), galois_sigma(x) * galois_sigma(y));
            OrderElem z = x;
            for (unsigned k = 0; k < n; ++k)
                z = galois_sigma(z);
            EXPECT_EQ(z, x);
        }
    }
}

TEST(Order, IncompatibleRings)
{
    auto r1 = make_ring(3, 2, 8), r2 = make_ring(3, 2, 10);
    EXPECT_THROW(OrderElem::one(r1) * OrderElem::one(r2), ComputationError);
}
