#include "morava/stabilizer.hpp"

#include <numeric>

namespace morava {

StabElem::StabElem(OrderElem x) : x_(std::move(x))
{
    if (!x_.coeff(0).is_unit())
        throw ComputationError("not a unit of O_n (valuation > 0)");
    strict_ = residue(x_.coeff(0)) == x_.ring()->residue_field().one();
}

StabElem StabElem::inverse() const { return StabElem(unit_inverse_order(x_)); }

StabElem StabElem::pow(const mpz_class& e) const { return StabElem(x_.pow(e)); }

StabElem commutator(const StabElem& x, const StabElem& y)
{
    return StabElem(x.value() * y.value() * unit_inverse_order(x.value()) * unit_inverse_order(y.value()));
}

FiltrationLevel filtration_level(const StabElem& x)
{
    return s_valuation(x.value() - OrderElem::one(x.ring()));
}

GrElem gr_project(const StabElem& x)
{
    if (!x.strict())
        throw ComputationError("gr_project needs a strict element (x = 1 mod S)");
    OrderElem d = x.value() - OrderElem::one(x.ring());
    SValuation v = s_valuation(d);
    if (v.zero_at_precision)
        throw ComputationError("trivial element: x = 1 at precision");
    const unsigned n = x.ring()->degree();
    const unsigned k = v.numerator;
    WittElem lead = d.coeff(k % n).divide_by_p_power(k / n);
    return GrElem{k, n, residue(lead)};
}

std::optional<unsigned long> element_order(const StabElem& x, unsigned long bound)
{
    if (bound < 1)
        throw UsageError("order bound must be >= 1");
    OrderElem cur = x.value();
    for (unsigned long m = 1; m <= bound; ++m) {
        if (cur.is_one())
            return m;
        if (m < bound)
            cur = cur * x.value();
    }
    return std::nullopt;
}

unsigned long default_order_bound(const WittRingPtr& ring)
{
    const unsigned long p = ring->p();
    const unsigned long nm = static_cast<unsigned long>(ring->degree()) * ring->precision();
    unsigned long pk = 1;
    while (pk < nm && pk <= 1000)
        pk *= p;
    unsigned long l = std::lcm(ring->q() - 1, pk);
    return std::min<unsigned long>(l, 1000);
}

StabElem order3_element(const WittRingPtr& ring)
{
    if (ring->p() != 3 || ring->degree() != 2)
        throw UsageError("order3_element only defined for p=3, n=2");
    OrderElem base = OrderElem::one(ring) + OrderElem::from_witt(ring->omega()) * OrderElem::uniformizer(ring);
    PadicInt minus_half = -unit_inverse(PadicInt(ring->params(), 2));
    StabElem a(base.left_scaled(ring->from_int(minus_half.value())));
    if (!a.pow(3).is_one())
        throw ComputationError("a^3 != 1 at precision");
    return a;
}

StabElem torus_embed(const WittRingPtr& ring, const FqElem& x)
{
    if (x.is_zero())
        throw ComputationError("not a unit: torus_embed(0)");
    return StabElem(OrderElem::from_witt(teichmuller(ring, x)));
}

std::vector<std::vector<WittElem>> right_multiplication_matrix(const OrderElem& x)
{
    const auto& ring = x.ring();
    const unsigned n = ring->degree();
    std::vector<std::vector<WittElem>> m(n, std::vector<WittElem>(n, ring->zero()));
    OrderElem basis = OrderElem::one(ring);
    const OrderElem S = OrderElem::uniformizer(ring);
    for (unsigned c = 0; c < n; ++c) {
        OrderElem img = basis * x;
        for (unsigned r = 0; r < n; ++r)
            m[r][c] = img.coeff(r);
        basis = basis * S;
    }
    return m;
}

WittElem witt_determinant(const std::vector<std::vector<WittElem>>& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    const auto& ring = m[0][0].ring();
    WittElem det = ring->zero();
    // Laplace expansion along the first row; n <= 4 in practice.
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<WittElem>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<WittElem> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        WittElem term = m[0][c] * witt_determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

WittElem reduced_norm(const OrderElem& x)
{
    WittElem det = witt_determinant(right_multiplication_matrix(x));
    for (std::size_t i = 1; i < det.coords().size(); ++i)
        if (det.coords()[i] != 0)
            throw ComputationError("reduced norm not Galois invariant at precision");
    return det;
}

PadicInt reduced_norm_value(const OrderElem& x)
{
    return PadicInt(x.ring()->params(), reduced_norm(x).coords()[0]);
}

S1Split s1_split(const StabElem& x)
{
    const auto& ring = x.ring();
    const unsigned long p = ring->p();
    const unsigned n = ring->degree();
    if (n % p == 0)
        throw ComputationError("splitting undefined: p divides n");
    if (!x.strict())
        throw ComputationError("s1_split needs a strict element");
    PadicInt z = nth_root_one_unit(reduced_norm_value(x.value()), static_cast<long>(n));
    StabElem x1(x.value().left_scaled(ring->from_int(unit_inverse(z).value())));
    if (reduced_norm_value(x1.value()).value() != 1)
        throw ComputationError("split component has nontrivial norm at precision");
    return S1Split{x1, z};
}

bool in_K(const StabElem& x)
{
    const auto& ring = x.ring();
    if (ring->p() != 3 || ring->degree() != 2)
        throw UsageError("in_K only defined for p=3, n=2");
    if (!x.strict())
        throw ComputationError("not in S_2^1: element is not strict");
    S1Split sp = s1_split(x);
    if (sp.z.value() != 1)
        throw ComputationError("not in S_2^1: reduced norm is nontrivial");
    FqElem d1 = s_digits(x.value(), 2)[1];
    // F_3 inside F_9 is spanned by 1 in the basis 1, w.
    return d1.coeffs[1] == 0;
}

}  // namespace morava
