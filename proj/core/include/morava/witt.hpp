#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morava/padic.hpp"

namespace morava {

// Element of F_q in the power basis 1, w, ..., w^(n-1) of the residue field,
// where w is the reduction of the Teichmueller generator.
struct FqElem {
    std::vector<unsigned> coeffs;

    bool is_zero() const;
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

// F_q = F_p[w]/(g) with w a primitive element.  Elements are also addressed by
// integer codes sum c_i p^i so brute-force sweeps can run on lookup tables.
class ResidueField {
public:
    using Code = std::uint32_t;

    // `relation` gives w^n = sum relation[i] w^i (entries mod p).
    ResidueField(unsigned long p, unsigned n, std::vector<unsigned> relation);

    unsigned long p() const { return p_; }
    unsigned degree() const { return n_; }
    Code size() const { return q_; }

    Code encode(const FqElem& x) const;
    FqElem decode(Code c) const;
    FqElem zero() const { return FqElem{std::vector<unsigned>(n_, 0)}; }
    FqElem one() const;
    FqElem generator() const;  // w
    FqElem from_int(long v) const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code scale(Code a, unsigned c) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const;
    // a^(p^k)
    Code frob(Code a, unsigned k) const;
    // Field trace to F_p.
    unsigned trace(Code a) const;

    // Discrete log base w; -1 for zero.
    long log(Code a) const { return log_[a]; }
    Code exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    FqElem add(const FqElem& a, const FqElem& b) const { return decode(add(encode(a), encode(b))); }
    FqElem sub(const FqElem& a, const FqElem& b) const { return decode(sub(encode(a), encode(b))); }
    FqElem mul(const FqElem& a, const FqElem& b) const { return decode(mul(encode(a), encode(b))); }
    FqElem pow(const FqElem& a, std::uint64_t e) const { return decode(pow(encode(a), e)); }
    FqElem frob(const FqElem& a, unsigned k) const { return decode(frob(encode(a), k)); }
    unsigned trace(const FqElem& a) const { return trace(encode(a)); }

    // Rendering as a polynomial in w, e.g. "1+2*w^2".
    std::string to_string(const FqElem& a) const;

private:
    unsigned long p_;
    unsigned n_;
    Code q_;
    std::vector<unsigned> relation_;
    std::vector<Code> pow_p_;  // p^i
    std::vector<Code> exp_;
    std::vector<long> log_;
    std::vector<unsigned> trace_;
};

class WittElem;

// W(F_q) mod p^M presented as Z/p^M[w]/(f) where w is the Teichmueller lift of
// a primitive element of F_q and f its minimal polynomial.
class WittRing : public std::enable_shared_from_this<WittRing> {
public:
    struct Token {};
    WittRing(Token, PadicParams params, unsigned n, std::vector<long> conway);

    const PadicParams& params() const { return params_; }
    unsigned long p() const { return params_.p(); }
    unsigned precision() const { return params_.precision(); }
    unsigned degree() const { return n_; }
    unsigned long q() const { return q_; }

    // Monic polynomial (low degree first, length n+1) the Teichmueller
    // generator satisfies mod p^M.
    const std::vector<mpz_class>& defining_poly() const { return defining_poly_; }
    // The Conway (or user) polynomial the field was built from.
    const std::vector<long>& base_poly() const { return conway_; }
    const ResidueField& residue_field() const { return field_; }

    // sigma^i as a matrix on the basis 1, w, ..., w^(n-1); column j is sigma^i(w^j).
    const ZpMatrix& sigma_matrix(unsigned i = 1) const { return sigma_[i % n_]; }
    const ZpMatrix& frobenius_matrix() const { return sigma_[n_ > 1 ? 1 : 0]; }

    WittElem zero() const;
    WittElem one() const;
    WittElem omega() const;
    WittElem omega_pow(long k) const;  // exact: w^(q-1) = 1
    WittElem from_int(const mpz_class& v) const;

    // w^n = sum relation()[i] w^i mod p^M.
    const std::vector<mpz_class>& relation() const { return relation_; }

    friend bool operator==(const WittRing& a, const WittRing& b)
    {
        return a.params_ == b.params_ && a.n_ == b.n_ && a.conway_ == b.conway_;
    }

private:
    PadicParams params_;
    unsigned n_;
    unsigned long q_;
    std::vector<long> conway_;
    std::vector<mpz_class> defining_poly_;
    std::vector<mpz_class> relation_;
    std::vector<std::vector<mpz_class>> omega_powers_;
    std::vector<ZpMatrix> sigma_;
    ResidueField field_;
};

using WittRingPtr = std::shared_ptr<const WittRing>;

class WittElem {
public:
    WittElem() = default;
    explicit WittElem(WittRingPtr ring);
    WittElem(WittRingPtr ring, std::vector<mpz_class> coords);

    const WittRingPtr& ring() const { return ring_; }
    const std::vector<mpz_class>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    // min p-adic valuation of coordinates; precision() when zero.
    unsigned valuation() const;

    WittElem operator-() const;
    WittElem pow(const mpz_class& e) const;
    WittElem scaled(const mpz_class& c) const;
    // Exact division by p^j; coordinates must be divisible.
    WittElem divide_by_p_power(unsigned j) const;

    WittElem& operator+=(const WittElem& o);
    WittElem& operator-=(const WittElem& o);
    friend WittElem operator+(WittElem a, const WittElem& b) { return a += b; }
    friend WittElem operator-(WittElem a, const WittElem& b) { return a -= b; }
    friend WittElem operator*(const WittElem& a, const WittElem& b);
    friend bool operator==(const WittElem& a, const WittElem& b);

private:
    WittRingPtr ring_;
    std::vector<mpz_class> c_;
};

void require_same_ring(const WittRingPtr& a, const WittRingPtr& b);

// Conway polynomial (low degree first, monic) for p in {2,3,5,7}, n in 1..4.
std::optional<std::vector<long>> conway_polynomial(unsigned long p, unsigned n);

// Builds W(F_{p^n}) mod p^M.  `poly` overrides the table (monic, low degree
// first, length n+1) and must be primitive irreducible mod p.
WittRingPtr make_ring(unsigned long p, unsigned n, unsigned M = kDefaultPrecision,
                      std::optional<std::vector<long>> poly = std::nullopt);

WittElem teichmuller(const WittRingPtr& ring, const FqElem& x);
WittElem frobenius(const WittElem& w);
WittElem frobenius_pow(const WittElem& w, unsigned k);
PadicInt trace(const WittElem& w);
FqElem residue(const WittElem& w);
std::vector<FqElem> teich_digits(const WittElem& w, unsigned count);
WittElem witt_unit_inverse(const WittElem& w);

}  // namespace morava
