#pragma once

#include <optional>
#include <string>

#include "morava/order.hpp"

namespace morava {

// Unit of O_n.  `strict()` means x = 1 mod S, i.e. x lies in the strict
// stabilizer group F_{1/n}.
class StabElem {
public:
    explicit StabElem(OrderElem x);

    static StabElem one(const WittRingPtr& ring) { return StabElem(OrderElem::one(ring)); }

    const OrderElem& value() const { return x_; }
    const WittRingPtr& ring() const { return x_.ring(); }
    bool strict() const { return strict_; }
    bool is_one() const { return x_.is_one(); }

    StabElem inverse() const;
    StabElem pow(const mpz_class& e) const;

    friend StabElem operator*(const StabElem& a, const StabElem& b) { return StabElem(a.x_ * b.x_); }
    friend bool operator==(const StabElem& a, const StabElem& b) { return a.x_ == b.x_; }

private:
    OrderElem x_;
    bool strict_ = false;
};

// Filtration level of x is v(x - 1); x in F_{k/n} iff level >= k/n.
using FiltrationLevel = SValuation;

// Class of an element of gr_{k/n} S_n = F_{k/n}/F_{(k+1)/n} = F_q.
struct GrElem {
    unsigned level = 1;  // numerator k of k/n
    unsigned n = 1;
    FqElem residue;

    friend bool operator==(const GrElem&, const GrElem&) = default;
};

StabElem commutator(const StabElem& x, const StabElem& y);
FiltrationLevel filtration_level(const StabElem& x);
// Leading term of a strict x != 1: (k/n, residue of the S^k digit of x - 1).
GrElem gr_project(const StabElem& x);

// Least m <= bound with x^m = 1 at precision S^{nM}, or nullopt.
std::optional<unsigned long> element_order(const StabElem& x, unsigned long bound);
// lcm(q-1, p^ceil(log_p(nM))) capped at 1000.
unsigned long default_order_bound(const WittRingPtr& ring);

// a = -(1/2)(1 + w S) at p = 3, n = 2; a^3 = 1.
StabElem order3_element(const WittRingPtr& ring);
// Teichmueller lift F_q^x -> S_n.
StabElem torus_embed(const WittRingPtr& ring, const FqElem& x);

// Determinant of right multiplication by x on the left W-basis 1, S, ..., S^{n-1}.
// Throws if the value is not Galois invariant at precision.
WittElem reduced_norm(const OrderElem& x);
PadicInt reduced_norm_value(const OrderElem& x);
// The n x n matrix over W whose determinant is the reduced norm; entry (r, c)
// is the coefficient of S^r in S^c * x.
std::vector<std::vector<WittElem>> right_multiplication_matrix(const OrderElem& x);
WittElem witt_determinant(const std::vector<std::vector<WittElem>>& m);

struct S1Split {
    StabElem x1;  // reduced norm 1
    PadicInt z;   // central factor, x = x1 * z
};

// S_n = S_n^1 x P(Z_p^x) for p not dividing n.
S1Split s1_split(const StabElem& x);

// p = 3, n = 2: membership in the torsion-free subgroup K of S_2^1.
bool in_K(const StabElem& x);

}  // namespace morava
