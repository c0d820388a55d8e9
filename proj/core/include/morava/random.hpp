#pragma once

#include <random>

#include "morava/stabilizer.hpp"

namespace morava {

// Uniform samples from the finite quotients used in property sweeps.
FqElem random_fq(const ResidueField& F, std::mt19937_64& rng, bool nonzero = false);
WittElem random_witt(const WittRingPtr& ring, std::mt19937_64& rng);
WittElem random_witt_unit(const WittRingPtr& ring, std::mt19937_64& rng);
OrderElem random_order(const WittRingPtr& ring, std::mt19937_64& rng);
StabElem random_unit(const WittRingPtr& ring, std::mt19937_64& rng);
// x = 1 mod S
StabElem random_strict_unit(const WittRingPtr& ring, std::mt19937_64& rng);
// Central element of 1 + pZ_p (p odd) or Z_2^x (p = 2).
PadicInt random_central(const PadicParams& params, std::mt19937_64& rng);

}  // namespace morava
