#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "morava/error.hpp"

namespace morava {

inline constexpr unsigned kDefaultPrecision = 16;

bool is_prime(unsigned long p);

// p and the truncation exponent M; all residues live in [0, p^M).
class PadicParams {
public:
    PadicParams(unsigned long p, unsigned M);

    unsigned long p() const { return p_; }
    unsigned precision() const { return M_; }
    const mpz_class& modulus() const { return modulus_; }

    mpz_class reduce(const mpz_class& x) const;
    mpz_class power_of_p(unsigned e) const;

    friend bool operator==(const PadicParams& a, const PadicParams& b) {
        return a.p_ == b.p_ && a.M_ == b.M_;
    }

private:
    unsigned long p_;
    unsigned M_;
    mpz_class modulus_;
};

class PadicInt {
public:
    PadicInt(const PadicParams& params, const mpz_class& value);
    PadicInt(const PadicParams& params, long value);

    const mpz_class& value() const { return value_; }
    const PadicParams& params() const { return params_; }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const;
    // Valuation of the residue; precision() when zero at precision.
    unsigned valuation() const;

    PadicInt operator-() const;
    PadicInt pow(const mpz_class& e) const;  // negative exponents need a unit

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.params_ == b.params_ && a.value_ == b.value_;
    }

private:
    PadicParams params_;
    mpz_class value_;
};

// Largest e with p^e | x. Throws ComputationError for x == 0.
unsigned nu_p(const mpz_class& x, unsigned long p);

PadicInt unit_inverse(const PadicInt& x);

// The root y of y^n = x characterised by y = 1 mod p (p odd), resp. the
// unique root in Z_2^x for odd n.  Requires p not dividing n.
PadicInt nth_root_one_unit(const PadicInt& x, long n);

// One cyclic summand: Z/p^exponent, or a free Z_p summand.
struct CyclicFactor {
    bool free = false;
    unsigned exponent = 0;

    friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

// Invariant-factor decomposition of a finitely generated Z_p-module.
// Free factors come first, then finite ones in descending order.
class CyclicDecomp {
public:
    explicit CyclicDecomp(unsigned long p = 2) : p_(p) {}
    CyclicDecomp(unsigned long p, std::vector<CyclicFactor> factors);

    static CyclicDecomp free_module(unsigned long p, std::size_t rank);
    static CyclicDecomp cyclic(unsigned long p, unsigned exponent);

    unsigned long prime() const { return p_; }
    const std::vector<CyclicFactor>& factors() const { return factors_; }

    std::size_t free_rank() const;
    std::size_t num_summands() const { return factors_.size(); }
    bool is_zero() const { return factors_.empty(); }
    // Sum of finite exponents (log_p of the torsion order).
    unsigned torsion_log_order() const;

    // Set when some free factor is only known to be Z/p^M at precision M.
    bool precision_caveat() const { return caveat_; }
    void set_precision_caveat(bool v = true) { caveat_ = v; }

    void add(CyclicFactor f);
    void add_free(std::size_t count = 1);
    void add_cyclic(unsigned exponent, std::size_t count = 1);
    CyclicDecomp direct_sum(const CyclicDecomp& other) const;

    // ASCII rendering, e.g. "Z_3 + (Z/3)^2", "Z/8", "0".
    std::string to_string() const;

    friend bool operator==(const CyclicDecomp& a, const CyclicDecomp& b) {
        return a.p_ == b.p_ && a.factors_ == b.factors_;
    }

private:
    void normalize();

    unsigned long p_;
    std::vector<CyclicFactor> factors_;
    bool caveat_ = false;
};

// Dense matrix over Z/p^M (entries kept reduced).
class ZpMatrix {
public:
    ZpMatrix() = default;
    ZpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ZpMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ZpMatrix mul(const ZpMatrix& other, const PadicParams& params) const;
    ZpMatrix reduced(const PadicParams& params) const;

    friend bool operator==(const ZpMatrix&, const ZpMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

// U * A * V = D mod p^M, D diagonal with entries p^e (or 0).
struct SmithForm {
    ZpMatrix D;
    ZpMatrix U;
    ZpMatrix V;
    ZpMatrix V_inv;
    // exponents[i] = e with D(i,i) = p^e; precision() for a zero entry.
    std::vector<unsigned> exponents;
};

SmithForm smith_normal_form(const ZpMatrix& A, const PadicParams& params);

// coker(A : Z_p^cols -> Z_p^rows). Full-precision factors become free with caveat.
CyclicDecomp cokernel_decomp(const SmithForm& snf, const PadicParams& params);
// ker(A) over Z_p: one free factor per zero diagonal entry and per excess column.
CyclicDecomp kernel_decomp(const SmithForm& snf, const PadicParams& params);

}  // namespace morava
