#include <gtest/gtest.h>

#include <random>

#include "morava/error.hpp"
#include "morava/expr.hpp"
#include "morava/random.hpp"
#include "morava/stabilizer.hpp"

using namespace morava;

TEST(Expr, OrderThreeElement)
{
    auto r = make_ring(3, 2, 16);
    EXPECT_EQ(parse_element("-1/2*(1+w*S)", r), order3_element(r).value());
}

TEST(Expr, MinusOneAtTwo)
{
    auto r = make_ring(2, 2, 16);
    EXPECT_EQ(parse_element("1-S^2", r), OrderElem::from_int(r, -1));
}

TEST(Expr, NoncommutativityWitness)
{
    // S w = sigma(w) S = w^2 S at p = 2, n = 2, so the difference vanishes.
    auto r = make_ring(2, 2, 16);
    const OrderElem v = parse_element("S*w - w^2*S", r);
    EXPECT_TRUE(v.is_zero());
    const OrderElem S = OrderElem::uniformizer(r), w = OrderElem::from_witt(r->omega());
    EXPECT_EQ(S * w - w * w * S, v);
    // At p = 3 the same expression is not zero: sigma(w) = w^3.
    EXPECT_FALSE(parse_element("S*w - w^2*S", make_ring(3, 2, 8)).is_zero());
}

TEST(Expr, EvaluationOrderAndPrecedence)
{
    auto r = make_ring(5, 2, 8);
    const OrderElem S = OrderElem::uniformizer(r), w = OrderElem::from_witt(r->omega());
    EXPECT_EQ(parse_element("w*S*w", r), w * S * w);
    EXPECT_EQ(parse_element("2+3*w^2", r), OrderElem::from_int(r, 2) + OrderElem::from_int(r, 3) * w * w);
    // Unary minus binds tighter than ^.
    EXPECT_EQ(parse_element("-w^2", r), w * w);
    EXPECT_EQ(parse_element("-(w^2)", r), -(w * w));
    EXPECT_EQ(parse_element("(1+S)^3", r), (OrderElem::one(r) + S).pow(3));
    EXPECT_EQ(parse_element("3/4", r), OrderElem::from_int(r, 3) * parse_element("1/4", r));
    EXPECT_TRUE((parse_element("1/4", r) * OrderElem::from_int(r, 4)).is_one());
}

TEST(Expr, Errors)
{
    auto r = make_ring(3, 2, 8);
    try {
        parse_element("1+*w", r);
        FAIL();
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_element("(1+w", r), UsageError);
    EXPECT_THROW(parse_element("1 2", r), UsageError);
    EXPECT_THROW(parse_element("x", r), UsageError);
    EXPECT_THROW(parse_element("1/3", r), ComputationError);
    EXPECT_THROW(parse_element("w+1", nullptr), UsageError);
    EXPECT_EQ(parse_expression("7")->uses_context(), false);
    EXPECT_EQ(parse_expression("7*S")->uses_context(), true);
}

TEST(Expr, PrintParseRoundTrip)
{
    auto r = make_ring(3, 2, 16);
    for (const char* src : {"-1/2*(1+w*S)", "1-S^2", "S*w - w^2*S", "((w))^3*-S+2", "-(-w)", "5/7*w^2-S*S"}) {
        ExprPtr e = parse_expression(src);
        ExprPtr again = parse_expression(e->to_string());
        EXPECT_EQ(again->to_string(), e->to_string()) << src;
        EXPECT_EQ(evaluate(*again, r), evaluate(*e, r)) << src;
    }
}

TEST(Expr, RandomExpressionsRoundTrip)
{
    std::mt19937_64 rng(31);
    auto r = make_ring(2, 3, 12);
    const char* atoms[] = {"w", "S", "3", "1/3", "(w+S)", "-w"};
    const char* ops[] = {"+", "-", "*"};
    for (int i = 0; i < 200; ++i) {
        std::string src = atoms[rng() % 6];
        for (int k = 0; k < 4; ++k) {
            src += ops[rng() % 3];
            src += atoms[rng() % 6];
            if (rng() % 4 == 0)
                src += "^2";
        }
        ExprPtr e = parse_expression(src);
        EXPECT_EQ(parse_element(e->to_string(), r), parse_element(src, r)) << src;
    }
}

TEST(Expr, PrintedElementsParseBack)
{
    std::mt19937_64 rng(37);
    for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {3, 2}, {5, 3}}) {
        auto r = make_ring(p, n, 6);
        for (int i = 0; i < 30; ++i) {
            const OrderElem x = random_order(r, rng);
            EXPECT_EQ(parse_element(x.to_string(), r), x) << x.to_string();
        }
        EXPECT_EQ(parse_element(OrderElem(r).to_string(), r), OrderElem(r));
    }
}
