#include "morava/witt.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace morava {

bool FqElem::is_zero() const
{
    for (unsigned c : coeffs)
        if (c != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// ResidueField

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    if (m == 1)
        return 0;
    // m = q - 1 < 2^32, so products fit in 64 bits.
    std::uint64_t r = 1, b = base % m;
    while (e) {
        if (e & 1)
            r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

ResidueField::ResidueField(unsigned long p, unsigned n, std::vector<unsigned> relation)
    : p_(p), n_(n), relation_(std::move(relation))
{
    if (n == 0 || relation_.size() != n)
        throw UsageError("residue field relation must have n entries");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        pow_p_.push_back(static_cast<Code>(q));
        q *= p;
        if (q > (1u << 24))
            throw UsageError("residue field too large for table arithmetic");
    }
    q_ = static_cast<Code>(q);
    for (auto& r : relation_)
        r %= p;

    log_.assign(q_, -1);
    exp_.reserve(q_ - 1);
    std::vector<unsigned> cur(n, 0);
    cur[0] = 1;
    for (Code k = 0; k < q_ - 1; ++k) {
        Code c = 0;
        for (unsigned i = 0; i < n; ++i)
            c += cur[i] * pow_p_[i];
        if (log_[c] != -1)
            throw UsageError("polynomial is not primitive irreducible mod p");
        log_[c] = static_cast<long>(k);
        exp_.push_back(c);
        // cur *= w
        unsigned top = cur[n - 1];
        for (unsigned i = n - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        for (unsigned i = 0; i < n; ++i)
            cur[i] = static_cast<unsigned>((cur[i] + static_cast<std::uint64_t>(top) * relation_[i]) % p);
    }
    Code back = 0;
    for (unsigned i = 0; i < n; ++i)
        back += cur[i] * pow_p_[i];
    if (back != 1)
        throw UsageError("polynomial is not primitive irreducible mod p");

    trace_.assign(q_, 0);
    for (Code a = 0; a < q_; ++a) {
        Code s = 0;
        for (unsigned i = 0; i < n; ++i)
            s = add(s, frob(a, i));
        if (s >= p_)
            throw ComputationError("field trace left F_p");
        trace_[a] = s;
    }
}

ResidueField::Code ResidueField::encode(const FqElem& x) const
{
    if (x.coeffs.size() != n_)
        throw UsageError("F_q element has wrong length");
    Code c = 0;
    for (unsigned i = 0; i < n_; ++i)
        c += static_cast<Code>(x.coeffs[i] % p_) * pow_p_[i];
    return c;
}

FqElem ResidueField::decode(Code c) const
{
    FqElem x{std::vector<unsigned>(n_)};
    for (unsigned i = 0; i < n_; ++i) {
        x.coeffs[i] = c % p_;
        c /= static_cast<Code>(p_);
    }
    return x;
}

FqElem ResidueField::one() const { return decode(1); }

FqElem ResidueField::generator() const { return decode(exp_[1 % (q_ - 1)]); }

FqElem ResidueField::from_int(long v) const
{
    long r = v % static_cast<long>(p_);
    if (r < 0)
        r += static_cast<long>(p_);
    return decode(static_cast<Code>(r));
}

ResidueField::Code ResidueField::add(Code a, Code b) const
{
    Code r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Code d = (a % p_ + b % p_) % p_;
        r += d * pow_p_[i];
        a /= static_cast<Code>(p_);
        b /= static_cast<Code>(p_);
    }
    return r;
}

ResidueField::Code ResidueField::neg(Code a) const
{
    Code r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Code d = (p_ - a % p_) % p_;
        r += d * pow_p_[i];
        a /= static_cast<Code>(p_);
    }
    return r;
}

ResidueField::Code ResidueField::sub(Code a, Code b) const { return add(a, neg(b)); }

ResidueField::Code ResidueField::scale(Code a, unsigned c) const
{
    Code r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Code d = static_cast<Code>((static_cast<std::uint64_t>(a % p_) * c) % p_);
        r += d * pow_p_[i];
        a /= static_cast<Code>(p_);
    }
    return r;
}

ResidueField::Code ResidueField::mul(Code a, Code b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + static_cast<std::uint64_t>(log_[b])) % (q_ - 1)];
}

ResidueField::Code ResidueField::inv(Code a) const
{
    if (a == 0)
        throw ComputationError("inverse of zero in F_q");
    return exp_[(q_ - 1 - static_cast<std::uint64_t>(log_[a])) % (q_ - 1)];
}

ResidueField::Code ResidueField::pow(Code a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    std::uint64_t k = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1));
    return exp_[k % (q_ - 1)];
}

ResidueField::Code ResidueField::frob(Code a, unsigned k) const
{
    if (a == 0)
        return 0;
    std::uint64_t e = powmod_u64(p_, k, q_ - 1);
    return pow(a, e == 0 ? (q_ - 1) : e);
}

unsigned ResidueField::trace(Code a) const { return trace_[a]; }

std::string ResidueField::to_string(const FqElem& a) const
{
    std::ostringstream out;
    bool any = false;
    for (unsigned i = 0; i < n_; ++i) {
        unsigned c = a.coeffs[i] % p_;
        if (c == 0)
            continue;
        if (any)
            out << "+";
        any = true;
        if (i == 0) {
            out << c;
            continue;
        }
        if (c != 1)
            out << c << "*";
        out << "w";
        if (i > 1)
            out << "^" << i;
    }
    if (!any)
        out << "0";
    return out.str();
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Z/p^M with relation X^n = sum rel[i] X^i.

namespace {

using Coords = std::vector<mpz_class>;

Coords mulmod(const Coords& a, const Coords& b, const Coords& rel, const PadicParams& P)
{
    const std::size_t n = rel.size();
    Coords prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] += a[i] * b[j];
    }
    for (std::size_t d = 2 * n - 2; d >= n; --d) {
        mpz_class top = P.reduce(prod[d]);
        if (top != 0)
            for (std::size_t i = 0; i < n; ++i)
                prod[d - n + i] += top * rel[i];
    }
    Coords r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = P.reduce(prod[i]);
    return r;
}

Coords powmod(Coords base, mpz_class e, const Coords& rel, const PadicParams& P)
{
    Coords r(rel.size());
    r[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = mulmod(r, base, rel, P);
        e >>= 1;
        if (e > 0)
            base = mulmod(base, base, rel, P);
    }
    return r;
}

// Solves B x = rhs mod p^M for B invertible mod p.
Coords solve_mod(ZpMatrix B, Coords rhs, const PadicParams& P)
{
    const std::size_t n = B.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (mpz_divisible_ui_p(B.at(r, c).get_mpz_t(), P.p()) == 0) {
                piv = r;
                break;
            }
        if (piv == n)
            throw ComputationError("basis change matrix is singular mod p");
        for (std::size_t j = 0; j < n; ++j)
            std::swap(B.at(c, j), B.at(piv, j));
        std::swap(rhs[c], rhs[piv]);
        mpz_class inv = unit_inverse(PadicInt(P, B.at(c, c))).value();
        for (std::size_t j = 0; j < n; ++j)
            B.at(c, j) = P.reduce(B.at(c, j) * inv);
        rhs[c] = P.reduce(rhs[c] * inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || B.at(r, c) == 0)
                continue;
            mpz_class f = B.at(r, c);
            for (std::size_t j = 0; j < n; ++j)
                B.at(r, j) = P.reduce(B.at(r, j) - f * B.at(c, j));
            rhs[r] = P.reduce(rhs[r] - f * rhs[c]);
        }
    }
    return rhs;
}

std::vector<unsigned> residue_relation(unsigned long p, const std::vector<long>& conway)
{
    const std::size_t n = conway.size() - 1;
    std::vector<unsigned> rel(n);
    for (std::size_t i = 0; i < n; ++i) {
        long r = (-conway[i]) % static_cast<long>(p);
        if (r < 0)
            r += static_cast<long>(p);
        rel[i] = static_cast<unsigned>(r);
    }
    return rel;
}

}  // namespace

// ---------------------------------------------------------------------------
// WittRing

std::optional<std::vector<long>> conway_polynomial(unsigned long p, unsigned n)
{
    static const std::map<std::pair<unsigned long, unsigned>, std::vector<long>> table = {
        {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},       {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
    };
    auto it = table.find({p, n});
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

WittRing::WittRing(Token, PadicParams params, unsigned n, std::vector<long> conway)
    : params_(std::move(params)),
      n_(n),
      q_(0),
      conway_(std::move(conway)),
      field_(params_.p(), n, residue_relation(params_.p(), conway_))
{
    const PadicParams& P = params_;
    q_ = field_.size();

    // Relation for the base polynomial: X^n = -sum conway[i] X^i.
    Coords base_rel(n);
    for (unsigned i = 0; i < n; ++i)
        base_rel[i] = P.reduce(mpz_class(-conway_[i]));

    // Teichmueller generator: limit of theta -> theta^q starting at X.
    Coords theta(n);
    if (n == 1)
        theta[0] = base_rel[0];
    else
        theta[1] = 1;
    const mpz_class qz(static_cast<unsigned long>(q_));
    for (unsigned it = 0; it <= P.precision(); ++it)
        theta = powmod(theta, qz, base_rel, P);
    if (powmod(theta, qz, base_rel, P) != theta)
        throw ComputationError("Teichmueller iteration did not stabilise");

    // Express theta^n in the basis 1, theta, ..., theta^(n-1).
    ZpMatrix B(n, n);
    Coords pw(n);
    pw[0] = 1;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i)
            B.at(i, j) = pw[i];
        pw = mulmod(pw, theta, base_rel, P);
    }
    relation_ = solve_mod(B, pw, P);

    defining_poly_.resize(n + 1);
    for (unsigned i = 0; i < n; ++i)
        defining_poly_[i] = P.reduce(-relation_[i]);
    defining_poly_[n] = 1;

    // Powers of omega in the new basis.
    Coords cur(n);
    cur[0] = 1;
    Coords om(n);
    if (n == 1)
        om[0] = relation_[0];
    else
        om[1] = 1;
    omega_powers_.reserve(q_ - 1);
    for (unsigned long k = 0; k + 1 < q_; ++k) {
        omega_powers_.push_back(cur);
        cur = mulmod(cur, om, relation_, P);
    }
    if (!(cur == omega_powers_[0]))
        throw ComputationError("omega^(q-1) != 1 at precision");

    sigma_.reserve(n);
    unsigned long pi = 1;  // p^i mod (q-1)
    for (unsigned i = 0; i < n; ++i) {
        ZpMatrix S(n, n);
        for (unsigned j = 0; j < n; ++j) {
            const Coords& col = omega_powers_[(static_cast<unsigned long>(j) * pi) % (q_ - 1)];
            for (unsigned r = 0; r < n; ++r)
                S.at(r, j) = col[r];
        }
        sigma_.push_back(std::move(S));
        pi = (pi * params_.p()) % (q_ - 1);
    }
}

WittElem WittRing::zero() const { return WittElem(shared_from_this()); }

WittElem WittRing::one() const { return from_int(1); }

WittElem WittRing::omega() const { return omega_pow(1); }

WittElem WittRing::omega_pow(long k) const
{
    long m = static_cast<long>(q_ - 1);
    long r = k % m;
    if (r < 0)
        r += m;
    return WittElem(shared_from_this(), omega_powers_[static_cast<std::size_t>(r)]);
}

WittElem WittRing::from_int(const mpz_class& v) const
{
    Coords c(n_);
    c[0] = params_.reduce(v);
    return WittElem(shared_from_this(), std::move(c));
}

WittRingPtr make_ring(unsigned long p, unsigned n, unsigned M, std::optional<std::vector<long>> poly)
{
    if (n < 1)
        throw UsageError("degree n must be >= 1");
    PadicParams params(p, M);
    std::vector<long> base;
    if (poly) {
        base = *poly;
        if (base.size() != n + 1 || base.back() != 1)
            throw UsageError("polynomial must be monic of degree n (low degree first)");
    } else {
        auto c = conway_polynomial(p, n);
        if (!c)
            throw UsageError("unsupported field, supply polynomial");
        base = *c;
    }
    return std::make_shared<const WittRing>(WittRing::Token{}, params, n, std::move(base));
}

// ---------------------------------------------------------------------------
// WittElem

void require_same_ring(const WittRingPtr& a, const WittRingPtr& b)
{
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw ComputationError("incompatible rings");
}

WittElem::WittElem(WittRingPtr ring) : ring_(std::move(ring)), c_(ring_->degree()) {}

WittElem::WittElem(WittRingPtr ring, std::vector<mpz_class> coords)
    : ring_(std::move(ring)), c_(std::move(coords))
{
    if (c_.size() != ring_->degree())
        throw UsageError("Witt vector needs exactly n coordinates");
    for (auto& x : c_)
        x = ring_->params().reduce(x);
}

bool WittElem::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool WittElem::is_one() const
{
    if (c_[0] != 1)
        return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

bool WittElem::is_unit() const { return valuation() == 0; }

unsigned WittElem::valuation() const
{
    unsigned v = ring_->precision();
    for (const auto& x : c_)
        if (x != 0)
            v = std::min(v, nu_p(x, ring_->p()));
    return v;
}

WittElem WittElem::operator-() const
{
    WittElem r = *this;
    for (auto& x : r.c_)
        x = ring_->params().reduce(-x);
    return r;
}

WittElem WittElem::scaled(const mpz_class& c) const
{
    WittElem r = *this;
    for (auto& x : r.c_)
        x = ring_->params().reduce(x * c);
    return r;
}

WittElem WittElem::divide_by_p_power(unsigned j) const
{
    const mpz_class pj = ring_->params().power_of_p(j);
    WittElem r = *this;
    for (auto& x : r.c_) {
        if (mpz_divisible_p(x.get_mpz_t(), pj.get_mpz_t()) == 0)
            throw ComputationError("Witt vector not divisible by p^" + std::to_string(j));
        x /= pj;
    }
    return r;
}

WittElem WittElem::pow(const mpz_class& e) const
{
    if (e < 0)
        return witt_unit_inverse(*this).pow(-e);
    return WittElem(ring_, powmod(c_, e, ring_->relation(), ring_->params()));
}

WittElem& WittElem::operator+=(const WittElem& o)
{
    require_same_ring(ring_, o.ring_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = ring_->params().reduce(c_[i] + o.c_[i]);
    return *this;
}

WittElem& WittElem::operator-=(const WittElem& o)
{
    require_same_ring(ring_, o.ring_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = ring_->params().reduce(c_[i] - o.c_[i]);
    return *this;
}

WittElem operator*(const WittElem& a, const WittElem& b)
{
    require_same_ring(a.ring_, b.ring_);
    WittElem r(a.ring_);
    r.c_ = mulmod(a.c_, b.c_, a.ring_->relation(), a.ring_->params());
    return r;
}

bool operator==(const WittElem& a, const WittElem& b)
{
    require_same_ring(a.ring_, b.ring_);
    return a.c_ == b.c_;
}

// ---------------------------------------------------------------------------
// Free operations

WittElem teichmuller(const WittRingPtr& ring, const FqElem& x)
{
    const auto& F = ring->residue_field();
    auto code = F.encode(x);
    if (code == 0)
        return ring->zero();
    return ring->omega_pow(F.log(code));
}

WittElem frobenius_pow(const WittElem& w, unsigned k)
{
    const auto& ring = w.ring();
    const ZpMatrix& S = ring->sigma_matrix(k);
    const unsigned n = ring->degree();
    std::vector<mpz_class> out(n);
    for (unsigned r = 0; r < n; ++r) {
        mpz_class s = 0;
        for (unsigned j = 0; j < n; ++j)
            if (w.coords()[j] != 0)
                s += S.at(r, j) * w.coords()[j];
        out[r] = std::move(s);
    }
    return WittElem(ring, std::move(out));
}

WittElem frobenius(const WittElem& w) { return frobenius_pow(w, 1); }

PadicInt trace(const WittElem& w)
{
    const unsigned n = w.ring()->degree();
    WittElem s = w;
    for (unsigned i = 1; i < n; ++i)
        s += frobenius_pow(w, i);
    for (unsigned i = 1; i < n; ++i)
        if (s.coords()[i] != 0)
            throw ComputationError("trace not Galois-invariant at precision");
    return PadicInt(w.ring()->params(), s.coords()[0]);
}

FqElem residue(const WittElem& w)
{
    const unsigned long p = w.ring()->p();
    FqElem r{std::vector<unsigned>(w.ring()->degree())};
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = static_cast<unsigned>(mpz_fdiv_ui(w.coords()[i].get_mpz_t(), p));
    return r;
}

std::vector<FqElem> teich_digits(const WittElem& w, unsigned count)
{
    if (count > w.ring()->precision())
        throw UsageError("digit count exceeds precision");
    std::vector<FqElem> digits;
    digits.reserve(count);
    WittElem cur = w;
    for (unsigned i = 0; i < count; ++i) {
        FqElem d = residue(cur);
        digits.push_back(d);
        if (i + 1 < count)
            cur = (cur - teichmuller(w.ring(), d)).divide_by_p_power(1);
    }
    return digits;
}

WittElem witt_unit_inverse(const WittElem& w)
{
    if (!w.is_unit())
        throw ComputationError("non-unit in W(F_q)");
    const auto& ring = w.ring();
    const auto& F = ring->residue_field();
    WittElem y = teichmuller(ring, F.decode(F.inv(F.encode(residue(w)))));
    const WittElem two = ring->from_int(2);
    for (unsigned it = 0; it < 64; ++it) {
        WittElem wy = w * y;
        if (wy.is_one())
            return y;
        y = y * (two - wy);
    }
    throw ComputationError("Witt inverse iteration did not converge");
}

}  // namespace morava
