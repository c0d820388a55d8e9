#include "morava/random.hpp"

namespace morava {

namespace {

mpz_class random_residue(const PadicParams& P, std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned long> digit(0, P.p() - 1);
    mpz_class v = 0;
    for (unsigned i = 0; i < P.precision(); ++i)
        v = v * P.p() + digit(rng);
    return v;
}

}  // namespace

FqElem random_fq(const ResidueField& F, std::mt19937_64& rng, bool nonzero)
{
    std::uniform_int_distribution<ResidueField::Code> pick(nonzero ? 1 : 0, F.size() - 1);
    return F.decode(pick(rng));
}

WittElem random_witt(const WittRingPtr& ring, std::mt19937_64& rng)
{
    std::vector<mpz_class> c(ring->degree());
    for (auto& x : c)
        x = random_residue(ring->params(), rng);
    return WittElem(ring, std::move(c));
}

WittElem random_witt_unit(const WittRingPtr& ring, std::mt19937_64& rng)
{
    // Teichmueller lift of a nonzero residue plus a multiple of p.
    WittElem w = random_witt(ring, rng).scaled(ring->p());
    return w + teichmuller(ring, random_fq(ring->residue_field(), rng, true));
}

OrderElem random_order(const WittRingPtr& ring, std::mt19937_64& rng)
{
    std::vector<WittElem> a;
    for (unsigned i = 0; i < ring->degree(); ++i)
        a.push_back(random_witt(ring, rng));
    return OrderElem(ring, std::move(a));
}

StabElem random_unit(const WittRingPtr& ring, std::mt19937_64& rng)
{
    OrderElem x = random_order(ring, rng);
    std::vector<WittElem> a = x.coeffs();
    a[0] = random_witt_unit(ring, rng);
    return StabElem(OrderElem(ring, std::move(a)));
}

StabElem random_strict_unit(const WittRingPtr& ring, std::mt19937_64& rng)
{
    OrderElem x = random_order(ring, rng);
    std::vector<WittElem> a = x.coeffs();
    a[0] = ring->one() + random_witt(ring, rng).scaled(ring->p());
    return StabElem(OrderElem(ring, std::move(a)));
}

PadicInt random_central(const PadicParams& P, std::mt19937_64& rng)
{
    mpz_class v = random_residue(P, rng);
    if (P.p() == 2)
        return PadicInt(P, 2 * v + 1);
    return PadicInt(P, 1 + P.p() * v);
}

}  // namespace morava
