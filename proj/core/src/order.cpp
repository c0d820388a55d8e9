#include "morava/order.hpp"

#include <sstream>

namespace morava {

std::string SValuation::to_string() const
{
    std::ostringstream out;
    if (zero_at_precision)
        out << ">= ";
    if (numerator % denominator == 0)
        out << numerator / denominator;
    else
        out << numerator << "/" << denominator;
    return out.str();
}

OrderElem::OrderElem(WittRingPtr ring) : ring_(std::move(ring))
{
    a_.assign(ring_->degree(), ring_->zero());
}

OrderElem::OrderElem(WittRingPtr ring, std::vector<WittElem> coeffs) : ring_(std::move(ring)), a_(std::move(coeffs))
{
    if (a_.size() != ring_->degree())
        throw UsageError("O_n element needs exactly n Witt coefficients");
    for (const auto& c : a_)
        require_same_ring(ring_, c.ring());
}

OrderElem OrderElem::from_witt(const WittElem& w)
{
    OrderElem x(w.ring());
    x.a_[0] = w;
    return x;
}

OrderElem OrderElem::from_int(const WittRingPtr& ring, const mpz_class& v)
{
    return from_witt(ring->from_int(v));
}

OrderElem OrderElem::uniformizer(const WittRingPtr& ring)
{
    OrderElem x(ring);
    if (ring->degree() == 1)
        x.a_[0] = ring->from_int(ring->p());  // S = p when n = 1
    else
        x.a_[1] = ring->one();
    return x;
}

OrderElem OrderElem::from_coords(const WittRingPtr& ring, const std::vector<std::vector<mpz_class>>& coeffs)
{
    const unsigned n = ring->degree();
    if (coeffs.size() != n)
        throw UsageError("coeffs must have n rows");
    std::vector<WittElem> a;
    a.reserve(n);
    for (const auto& row : coeffs)
        a.emplace_back(ring, row);
    return OrderElem(ring, std::move(a));
}

std::vector<std::vector<mpz_class>> OrderElem::coords() const
{
    std::vector<std::vector<mpz_class>> out;
    out.reserve(a_.size());
    for (const auto& c : a_)
        out.push_back(c.coords());
    return out;
}

bool OrderElem::is_zero() const
{
    for (const auto& c : a_)
        if (!c.is_zero())
            return false;
    return true;
}

bool OrderElem::is_one() const
{
    if (!a_[0].is_one())
        return false;
    for (std::size_t i = 1; i < a_.size(); ++i)
        if (!a_[i].is_zero())
            return false;
    return true;
}

OrderElem OrderElem::operator-() const
{
    OrderElem r = *this;
    for (auto& c : r.a_)
        c = -c;
    return r;
}

OrderElem OrderElem::left_scaled(const WittElem& w) const
{
    OrderElem r = *this;
    for (auto& c : r.a_)
        c = w * c;
    return r;
}

OrderElem OrderElem::pow(const mpz_class& e) const
{
    if (e < 0)
        return unit_inverse_order(*this).pow(-e);
    OrderElem r = one(ring_);
    OrderElem base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            r = r * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return r;
}

OrderElem& OrderElem::operator+=(const OrderElem& o)
{
    require_same_ring(ring_, o.ring_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

OrderElem& OrderElem::operator-=(const OrderElem& o)
{
    require_same_ring(ring_, o.ring_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

OrderElem operator*(const OrderElem& x, const OrderElem& y)
{
    require_same_ring(x.ring_, y.ring_);
    const auto& ring = x.ring_;
    const unsigned n = ring->degree();
    const mpz_class p(ring->p());
    // (a_i S^i)(b_j S^j) = a_i sigma^i(b_j) S^{i+j}, S^n = p.
    std::vector<WittElem> low(n, ring->zero());
    std::vector<WittElem> high(n, ring->zero());
    for (unsigned j = 0; j < n; ++j) {
        if (y.a_[j].is_zero())
            continue;
        for (unsigned i = 0; i < n; ++i) {
            if (x.a_[i].is_zero())
                continue;
            WittElem term = x.a_[i] * (i == 0 ? y.a_[j] : frobenius_pow(y.a_[j], i));
            if (i + j < n)
                low[i + j] += term;
            else
                high[i + j - n] += term;
        }
    }
    for (unsigned m = 0; m < n; ++m)
        if (!high[m].is_zero())
            low[m] += high[m].scaled(p);
    return OrderElem(ring, std::move(low));
}

bool operator==(const OrderElem& a, const OrderElem& b)
{
    require_same_ring(a.ring_, b.ring_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i]))
            return false;
    return true;
}

std::string OrderElem::to_string() const
{
    std::ostringstream out;
    bool any = false;
    const unsigned n = ring_->degree();
    for (unsigned i = 0; i < n; ++i) {
        const auto& c = a_[i].coords();
        for (unsigned j = 0; j < c.size(); ++j) {
            if (c[j] == 0)
                continue;
            if (any)
                out << " + ";
            any = true;
            bool need_star = false;
            if (c[j] != 1 || (i == 0 && j == 0)) {
                out << c[j].get_str();
                need_star = true;
            }
            if (j > 0) {
                out << (need_star ? "*" : "") << "w";
                if (j > 1)
                    out << "^" << j;
                need_star = true;
            }
            if (i > 0) {
                out << (need_star ? "*" : "") << "S";
                if (i > 1)
                    out << "^" << i;
            }
        }
    }
    if (!any)
        out << "0";
    return out.str();
}

OrderElem order_mul(const OrderElem& x, const OrderElem& y) { return x * y; }

SValuation s_valuation(const OrderElem& x)
{
    const unsigned n = x.ring()->degree();
    const unsigned M = x.ring()->precision();
    SValuation v{n * M, n, true};
    for (unsigned i = 0; i < n; ++i) {
        const WittElem& a = x.coeff(i);
        if (a.is_zero())
            continue;
        unsigned k = n * a.valuation() + i;
        if (v.zero_at_precision || k < v.numerator) {
            v.numerator = k;
            v.zero_at_precision = false;
        }
    }
    return v;
}

OrderElem unit_inverse_order(const OrderElem& x)
{
    if (!x.coeff(0).is_unit())
        throw ComputationError("non-unit in O_n");
    const auto& ring = x.ring();
    OrderElem y = OrderElem::from_witt(witt_unit_inverse(x.coeff(0)));
    const OrderElem two = OrderElem::from_int(ring, 2);
    // Newton: y <- y(2 - xy) doubles the S-adic accuracy.
    for (unsigned it = 0; it < 64; ++it) {
        OrderElem xy = x * y;
        if (xy.is_one()) {
            if (!(y * x).is_one())
                throw ComputationError("left and right inverse disagree at precision");
            return y;
        }
        y = y * (two - xy);
    }
    throw ComputationError("O_n inverse iteration did not converge");
}

std::vector<FqElem> s_digits(const OrderElem& x, unsigned count)
{
    const unsigned n = x.ring()->degree();
    const unsigned M = x.ring()->precision();
    if (count > n * M)
        throw UsageError("digit count exceeds precision nM");
    std::vector<FqElem> out(count, x.ring()->residue_field().zero());
    for (unsigned i = 0; i < n && i < count; ++i) {
        unsigned need = (count - i + n - 1) / n;
        auto digits = teich_digits(x.coeff(i), need);
        for (unsigned j = 0; j < need; ++j)
            out[i + j * n] = digits[j];
    }
    return out;
}

OrderElem galois_sigma(const OrderElem& x)
{
    std::vector<WittElem> a;
    a.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs())
        a.push_back(frobenius(c));
    return OrderElem(x.ring(), std::move(a));
}

}  // namespace morava
