#pragma once

#include <string>
#include <vector>

#include "morava/witt.hpp"

namespace morava {

// S-adic valuation k/n with v(S) = 1/n, v(p) = 1.  When the element vanishes
// at precision, `zero_at_precision` is set and k = nM is a lower bound.
struct SValuation {
    unsigned numerator = 0;
    unsigned denominator = 1;
    bool zero_at_precision = false;

    std::string to_string() const;
    friend bool operator==(const SValuation&, const SValuation&) = default;
};

// x = a_0 + a_1 S + ... + a_{n-1} S^{n-1} in O_n = W<S>/(S^n = p, S w = w^sigma S),
// exact modulo S^{nM}.
class OrderElem {
public:
    OrderElem() = default;
    explicit OrderElem(WittRingPtr ring);
    OrderElem(WittRingPtr ring, std::vector<WittElem> coeffs);

    static OrderElem from_witt(const WittElem& w);
    static OrderElem from_int(const WittRingPtr& ring, const mpz_class& v);
    static OrderElem one(const WittRingPtr& ring) { return from_int(ring, 1); }
    static OrderElem uniformizer(const WittRingPtr& ring);  // S
    // Integer coordinates: coeffs[i][j] is the coefficient of w^j in a_i.
    static OrderElem from_coords(const WittRingPtr& ring, const std::vector<std::vector<mpz_class>>& coeffs);

    const WittRingPtr& ring() const { return ring_; }
    const std::vector<WittElem>& coeffs() const { return a_; }
    const WittElem& coeff(unsigned i) const { return a_[i]; }
    std::vector<std::vector<mpz_class>> coords() const;

    bool is_zero() const;
    bool is_one() const;

    OrderElem operator-() const;
    OrderElem pow(const mpz_class& e) const;
    // Left multiplication by a Witt scalar.
    OrderElem left_scaled(const WittElem& w) const;

    OrderElem& operator+=(const OrderElem& o);
    OrderElem& operator-=(const OrderElem& o);
    friend OrderElem operator+(OrderElem a, const OrderElem& b) { return a += b; }
    friend OrderElem operator-(OrderElem a, const OrderElem& b) { return a -= b; }
    friend OrderElem operator*(const OrderElem& a, const OrderElem& b);
    friend bool operator==(const OrderElem& a, const OrderElem& b);

    // Parseable rendering, e.g. "2 + 3*w*S".
    std::string to_string() const;

private:
    WittRingPtr ring_;
    std::vector<WittElem> a_;
};

OrderElem order_mul(const OrderElem& x, const OrderElem& y);
SValuation s_valuation(const OrderElem& x);
OrderElem unit_inverse_order(const OrderElem& x);
std::vector<FqElem> s_digits(const OrderElem& x, unsigned count);
OrderElem galois_sigma(const OrderElem& x);

}  // namespace morava
