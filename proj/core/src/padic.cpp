#include "morava/padic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace morava {

bool is_prime(unsigned long p)
{
    if (p < 2)
        return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

PadicParams::PadicParams(unsigned long p, unsigned M) : p_(p), M_(M)
{
    if (!is_prime(p))
        throw UsageError("p = " + std::to_string(p) + " is not prime");
    if (M < 1)
        throw UsageError("precision M must be >= 1");
    mpz_ui_pow_ui(modulus_.get_mpz_t(), p, M);
}

mpz_class PadicParams::reduce(const mpz_class& x) const
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
    return r;
}

mpz_class PadicParams::power_of_p(unsigned e) const
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, e);
    return r;
}

PadicInt::PadicInt(const PadicParams& params, const mpz_class& value)
    : params_(params), value_(params.reduce(value))
{
}

PadicInt::PadicInt(const PadicParams& params, long value) : PadicInt(params, mpz_class(value)) {}

bool PadicInt::is_unit() const
{
    return mpz_divisible_ui_p(value_.get_mpz_t(), params_.p()) == 0;
}

unsigned PadicInt::valuation() const
{
    if (value_ == 0)
        return params_.precision();
    return nu_p(value_, params_.p());
}

PadicInt PadicInt::operator-() const { return PadicInt(params_, -value_); }

PadicInt PadicInt::pow(const mpz_class& e) const
{
    if (e < 0)
        return unit_inverse(*this).pow(-e);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), params_.modulus().get_mpz_t());
    return PadicInt(params_, r);
}

static void require_same(const PadicInt& a, const PadicInt& b)
{
    if (!(a.params() == b.params()))
        throw ComputationError("p-adic operands at different (p, M)");
}

PadicInt operator+(const PadicInt& a, const PadicInt& b)
{
    require_same(a, b);
    return PadicInt(a.params_, a.value_ + b.value_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b)
{
    require_same(a, b);
    return PadicInt(a.params_, a.value_ - b.value_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b)
{
    require_same(a, b);
    return PadicInt(a.params_, a.value_ * b.value_);
}

unsigned nu_p(const mpz_class& x, unsigned long p)
{
    if (x == 0)
        throw ComputationError("valuation of zero undefined");
    mpz_class f(p);
    mpz_class rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), f.get_mpz_t()));
}

PadicInt unit_inverse(const PadicInt& x)
{
    if (!x.is_unit())
        throw ComputationError("non-unit: " + x.value().get_str() + " is divisible by p");
    mpz_class r;
    mpz_invert(r.get_mpz_t(), x.value().get_mpz_t(), x.params().modulus().get_mpz_t());
    return PadicInt(x.params(), r);
}

PadicInt nth_root_one_unit(const PadicInt& x, long n)
{
    const auto& P = x.params();
    if (n < 1)
        throw UsageError("root index must be positive");
    if (n % static_cast<long>(P.p()) == 0)
        throw ComputationError("root not unique/defined: p divides n");
    if (P.p() == 2) {
        if (!x.is_unit())
            throw ComputationError("non-unit: 2-adic root needs a unit");
    } else if (!(PadicInt(P, x.value() - 1).valuation() >= 1)) {
        throw ComputationError("not a 1-unit: x must be 1 mod p");
    }

    // Hensel: f(y) = y^n - x, f'(y) = n y^(n-1) is a unit for y = 1 mod p.
    PadicInt y(P, 1);
    const PadicInt nn(P, n);
    for (unsigned iter = 0; iter < 2 * P.precision() + 2; ++iter) {
        PadicInt fy = y.pow(n) - x;
        if (fy.is_zero())
            return y;
        PadicInt df = nn * y.pow(n - 1);
        y = y - fy * unit_inverse(df);
    }
    throw ComputationError("n-th root iteration did not converge");
}

CyclicDecomp::CyclicDecomp(unsigned long p, std::vector<CyclicFactor> factors)
    : p_(p), factors_(std::move(factors))
{
    normalize();
}

CyclicDecomp CyclicDecomp::free_module(unsigned long p, std::size_t rank)
{
    CyclicDecomp d(p);
    d.add_free(rank);
    return d;
}

CyclicDecomp CyclicDecomp::cyclic(unsigned long p, unsigned exponent)
{
    CyclicDecomp d(p);
    d.add_cyclic(exponent);
    return d;
}

std::size_t CyclicDecomp::free_rank() const
{
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(), [](const CyclicFactor& f) { return f.free; }));
}

unsigned CyclicDecomp::torsion_log_order() const
{
    unsigned s = 0;
    for (const auto& f : factors_)
        if (!f.free)
            s += f.exponent;
    return s;
}

void CyclicDecomp::add(CyclicFactor f)
{
    if (!f.free && f.exponent == 0)
        return;
    factors_.push_back(f);
    normalize();
}

void CyclicDecomp::add_free(std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i)
        factors_.push_back({true, 0});
    normalize();
}

void CyclicDecomp::add_cyclic(unsigned exponent, std::size_t count)
{
    if (exponent == 0)
        return;
    for (std::size_t i = 0; i < count; ++i)
        factors_.push_back({false, exponent});
    normalize();
}

CyclicDecomp CyclicDecomp::direct_sum(const CyclicDecomp& other) const
{
    CyclicDecomp r = *this;
    for (const auto& f : other.factors_)
        r.factors_.push_back(f);
    r.caveat_ = caveat_ || other.caveat_;
    r.normalize();
    return r;
}

void CyclicDecomp::normalize()
{
    std::erase_if(factors_, [](const CyclicFactor& f) { return !f.free && f.exponent == 0; });
    for (auto& f : factors_)
        if (f.free)
            f.exponent = 0;
    std::sort(factors_.begin(), factors_.end(), [](const CyclicFactor& a, const CyclicFactor& b) {
        if (a.free != b.free)
            return a.free;
        return a.exponent > b.exponent;
    });
}

std::string CyclicDecomp::to_string() const
{
    if (factors_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& term, std::size_t count) {
        if (!first)
            out << " + ";
        first = false;
        if (count == 1)
            out << term;
        else
            out << "(" << term << ")^" << count;
    };
    std::size_t i = 0;
    while (i < factors_.size()) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i])
            ++j;
        std::string term;
        if (factors_[i].free) {
            term = "Z_" + std::to_string(p_);
        } else {
            term = "Z/" + std::to_string(p_);
            if (factors_[i].exponent > 1)
                term += "^" + std::to_string(factors_[i].exponent);
        }
        emit(term, j - i);
        i = j;
    }
    return out.str();
}

ZpMatrix ZpMatrix::identity(std::size_t n)
{
    ZpMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I.at(i, i) = 1;
    return I;
}

ZpMatrix ZpMatrix::mul(const ZpMatrix& other, const PadicParams& params) const
{
    if (cols_ != other.rows_)
        throw UsageError("matrix dimension mismatch");
    ZpMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            mpz_class s = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                s += at(i, k) * other.at(k, j);
            r.at(i, j) = params.reduce(s);
        }
    return r;
}

ZpMatrix ZpMatrix::reduced(const PadicParams& params) const
{
    ZpMatrix r = *this;
    for (auto& x : r.data_)
        x = params.reduce(x);
    return r;
}

namespace {

unsigned entry_valuation(const mpz_class& x, const PadicParams& P)
{
    return x == 0 ? P.precision() : nu_p(x, P.p());
}

}  // namespace

SmithForm smith_normal_form(const ZpMatrix& A_in, const PadicParams& P)
{
    ZpMatrix A = A_in.reduced(P);
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    ZpMatrix U = ZpMatrix::identity(m);
    ZpMatrix V = ZpMatrix::identity(n);
    ZpMatrix Vi = ZpMatrix::identity(n);
    const std::size_t r = std::min(m, n);

    for (std::size_t t = 0; t < r; ++t) {
        // Pivot of minimal valuation in the trailing block.
        std::size_t pi = t, pj = t;
        unsigned best = P.precision();
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                unsigned v = entry_valuation(A.at(i, j), P);
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == P.precision())
            break;

        if (pi != t)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(A.at(t, j), A.at(pi, j));
        if (pi != t)
            for (std::size_t j = 0; j < m; ++j)
                std::swap(U.at(t, j), U.at(pi, j));
        if (pj != t) {
            for (std::size_t i = 0; i < m; ++i)
                std::swap(A.at(i, t), A.at(i, pj));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(V.at(i, t), V.at(i, pj));
            for (std::size_t j = 0; j < n; ++j)
                std::swap(Vi.at(t, j), Vi.at(pj, j));
        }

        // Normalize the pivot to p^best.
        const mpz_class pe = P.power_of_p(best);
        mpz_class unit = A.at(t, t) / pe;
        mpz_class uinv = unit_inverse(PadicInt(P, unit)).value();
        for (std::size_t j = 0; j < n; ++j)
            A.at(t, j) = P.reduce(A.at(t, j) * uinv);
        for (std::size_t j = 0; j < m; ++j)
            U.at(t, j) = P.reduce(U.at(t, j) * uinv);

        for (std::size_t i = 0; i < m; ++i) {
            if (i == t || A.at(i, t) == 0)
                continue;
            mpz_class c = A.at(i, t) / pe;
            for (std::size_t j = 0; j < n; ++j)
                A.at(i, j) = P.reduce(A.at(i, j) - c * A.at(t, j));
            for (std::size_t j = 0; j < m; ++j)
                U.at(i, j) = P.reduce(U.at(i, j) - c * U.at(t, j));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == t || A.at(t, j) == 0)
                continue;
            mpz_class c = A.at(t, j) / pe;
            for (std::size_t i = 0; i < m; ++i)
                A.at(i, j) = P.reduce(A.at(i, j) - c * A.at(i, t));
            for (std::size_t i = 0; i < n; ++i)
                V.at(i, j) = P.reduce(V.at(i, j) - c * V.at(i, t));
            for (std::size_t k = 0; k < n; ++k)
                Vi.at(t, k) = P.reduce(Vi.at(t, k) + c * Vi.at(j, k));
        }
    }

    SmithForm out{A, U, V, Vi, {}};
    for (std::size_t t = 0; t < r; ++t)
        out.exponents.push_back(entry_valuation(A.at(t, t), P));
    return out;
}

CyclicDecomp cokernel_decomp(const SmithForm& snf, const PadicParams& P)
{
    CyclicDecomp d(P.p());
    for (unsigned e : snf.exponents) {
        if (e >= P.precision()) {
            d.add_free();
            d.set_precision_caveat();
        } else {
            d.add_cyclic(e);
        }
    }
    if (snf.D.rows() > snf.exponents.size()) {
        d.add_free(snf.D.rows() - snf.exponents.size());
        d.set_precision_caveat();
    }
    return d;
}

CyclicDecomp kernel_decomp(const SmithForm& snf, const PadicParams& P)
{
    CyclicDecomp d(P.p());
    for (unsigned e : snf.exponents)
        if (e >= P.precision())
            d.add_free();
    if (snf.D.cols() > snf.exponents.size())
        d.add_free(snf.D.cols() - snf.exponents.size());
    if (d.free_rank() > 0)
        d.set_precision_caveat();
    return d;
}

}  // namespace morava
