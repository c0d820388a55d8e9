#pragma once

#include <nlohmann/json.hpp>

#include "morava/grlie.hpp"
#include "morava/homalg.hpp"
#include "morava/k1.hpp"
#include "morava/specseq.hpp"

namespace morava {

using Json = nlohmann::json;

// Integers that fit in 64 bits are emitted as numbers, larger ones as strings.
Json json_of(const mpz_class& v);
mpz_class mpz_from_json(const Json& j);

// {"p","n","M","coeffs":[[...], ...]}; coeffs[i][j] is the w^j coordinate of a_i.
Json json_of(const OrderElem& x);
// Builds the ring from p, n, M unless one is supplied (which must match).
OrderElem order_from_json(const Json& j, WittRingPtr ring = nullptr);

Json json_of(const WittElem& w);
Json json_of(const FqElem& x);
Json json_of(const CyclicDecomp& d);
Json json_of(const SValuation& v);
Json json_of(const GrElem& g);
Json json_of(const GrSubspace& s);
Json json_of(const GroupCheckReport& r);
Json json_of(const AbelianizationReport& r);
Json json_of(const CohomologyGroup& h);
Json json_of(const G1Cohomology& h);
Json json_of(const Chart& c);
Json json_of(const HomotopyTable& t);
Json json_of(const std::vector<PsiValuationRow>& rows, unsigned long p);

}  // namespace morava
