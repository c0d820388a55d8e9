#pragma once

#include <memory>
#include <string>
#include <vector>

#include "morava/order.hpp"

namespace morava {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := int | int '/' int | 'w' | 'S' | '(' expr ')' | '-' base
struct ElementExpr {
    enum class Kind { Int, Ratio, Omega, Uniformizer, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Int;
    mpz_class num;  // Int value, Ratio numerator, Pow exponent
    mpz_class den;  // Ratio denominator
    std::vector<std::shared_ptr<const ElementExpr>> args;

    bool uses_context() const;  // mentions w or S
    std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const ElementExpr>;

// Throws UsageError("syntax error at position N: ...").
ExprPtr parse_expression(const std::string& src);

// Products are evaluated left to right in O_n.  Throws UsageError when ring is
// null, ComputationError on division by a non-unit.
OrderElem evaluate(const ElementExpr& e, const WittRingPtr& ring);
OrderElem parse_element(const std::string& src, const WittRingPtr& ring);

}  // namespace morava
