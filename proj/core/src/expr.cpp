#include "morava/expr.hpp"

#include <cctype>

namespace morava {

namespace {

ExprPtr node(ElementExpr::Kind k, std::vector<ExprPtr> args = {}, mpz_class num = 0, mpz_class den = 1)
{
    auto e = std::make_shared<ElementExpr>();
    e->kind = k;
    e->args = std::move(args);
    e->num = std::move(num);
    e->den = std::move(den);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : s_(src) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UsageError("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    bool at_digit()
    {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    mpz_class integer()
    {
        if (!at_digit())
            fail("expected integer");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    ExprPtr expr()
    {
        ExprPtr left = term();
        for (;;) {
            if (accept('+'))
                left = node(ElementExpr::Kind::Add, {left, term()});
            else if (accept('-'))
                left = node(ElementExpr::Kind::Sub, {left, term()});
            else
                return left;
        }
    }

    ExprPtr term()
    {
        ExprPtr left = factor();
        while (accept('*'))
            left = node(ElementExpr::Kind::Mul, {left, factor()});
        return left;
    }

    ExprPtr factor()
    {
        ExprPtr b = base();
        if (accept('^')) {
            if (!at_digit())
                fail("exponent must be a nonnegative integer");
            return node(ElementExpr::Kind::Pow, {b}, integer());
        }
        return b;
    }

    ExprPtr base()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        if (at_digit()) {
            mpz_class n = integer();
            if (accept('/'))
                return node(ElementExpr::Kind::Ratio, {}, n, integer());
            return node(ElementExpr::Kind::Int, {}, n);
        }
        if (accept('w'))
            return node(ElementExpr::Kind::Omega);
        if (accept('S'))
            return node(ElementExpr::Kind::Uniformizer);
        if (accept('-'))
            return node(ElementExpr::Kind::Neg, {base()});
        if (accept('(')) {
            ExprPtr e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

bool ElementExpr::uses_context() const
{
    if (kind == Kind::Omega || kind == Kind::Uniformizer)
        return true;
    for (const auto& a : args)
        if (a->uses_context())
            return true;
    return false;
}

std::string ElementExpr::to_string() const
{
    switch (kind) {
    case Kind::Int:
        return num.get_str();
    case Kind::Ratio:
        return num.get_str() + "/" + den.get_str();
    case Kind::Omega:
        return "w";
    case Kind::Uniformizer:
        return "S";
    case Kind::Neg:
        return "-(" + args[0]->to_string() + ")";
    case Kind::Add:
        return "(" + args[0]->to_string() + " + " + args[1]->to_string() + ")";
    case Kind::Sub:
        return "(" + args[0]->to_string() + " - " + args[1]->to_string() + ")";
    case Kind::Mul:
        return args[0]->to_string() + "*" + args[1]->to_string();
    case Kind::Pow:
        return "(" + args[0]->to_string() + ")^" + num.get_str();
    }
    return "";
}

ExprPtr parse_expression(const std::string& src)
{
    return Parser(src).parse();
}

OrderElem evaluate(const ElementExpr& e, const WittRingPtr& ring)
{
    if (!ring)
        throw UsageError(e.uses_context() ? "`w`/`S` used without context (--p, --n)"
                                          : "no ring context (--p, --n)");
    switch (e.kind) {
    case ElementExpr::Kind::Int:
        return OrderElem::from_int(ring, e.num);
    case ElementExpr::Kind::Ratio: {
        PadicInt d(ring->params(), e.den);
        if (!d.is_unit())
            throw ComputationError("division by non-unit " + e.den.get_str());
        return OrderElem::from_int(ring, (PadicInt(ring->params(), e.num) * unit_inverse(d)).value());
    }
    case ElementExpr::Kind::Omega:
        return OrderElem::from_witt(ring->omega());
    case ElementExpr::Kind::Uniformizer:
        return OrderElem::uniformizer(ring);
    case ElementExpr::Kind::Neg:
        return -evaluate(*e.args[0], ring);
    case ElementExpr::Kind::Add:
        return evaluate(*e.args[0], ring) + evaluate(*e.args[1], ring);
    case ElementExpr::Kind::Sub:
        return evaluate(*e.args[0], ring) - evaluate(*e.args[1], ring);
    case ElementExpr::Kind::Mul:
        return evaluate(*e.args[0], ring) * evaluate(*e.args[1], ring);
    case ElementExpr::Kind::Pow:
        return evaluate(*e.args[0], ring).pow(e.num);
    }
    throw UsageError("malformed expression");
}

OrderElem parse_element(const std::string& src, const WittRingPtr& ring)
{
    ExprPtr e = parse_expression(src);
    return evaluate(*e, ring);
}

}  // namespace morava
