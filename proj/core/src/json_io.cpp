#include "morava/json_io.hpp"

namespace morava {

Json json_of(const mpz_class& v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return Json(v.get_si());
    return Json(v.get_str());
}

mpz_class mpz_from_json(const Json& j)
{
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw UsageError("malformed integer string in JSON");
        return v;
    }
    throw UsageError("expected an integer in JSON");
}

Json json_of(const OrderElem& x)
{
    const auto& r = x.ring();
    Json coeffs = Json::array();
    for (const auto& row : x.coords()) {
        Json jr = Json::array();
        for (const auto& c : row)
            jr.push_back(json_of(c));
        coeffs.push_back(jr);
    }
    return Json{{"p", r->p()}, {"n", r->degree()}, {"M", r->precision()}, {"coeffs", coeffs}};
}

OrderElem order_from_json(const Json& j, WittRingPtr ring)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("M") || !j.contains("coeffs"))
        throw UsageError("element JSON needs p, n, M and coeffs");
    const auto p = j.at("p").get<unsigned long>();
    const auto n = j.at("n").get<unsigned>();
    const auto M = j.at("M").get<unsigned>();
    if (!ring)
        ring = make_ring(p, n, M);
    else if (ring->p() != p || ring->degree() != n || ring->precision() != M)
        throw UsageError("element JSON does not match the ring context");
    std::vector<std::vector<mpz_class>> coords;
    for (const auto& row : j.at("coeffs")) {
        std::vector<mpz_class> r;
        for (const auto& c : row)
            r.push_back(ring->params().reduce(mpz_from_json(c)));
        if (r.size() != n)
            throw UsageError("each coefficient row needs n entries");
        coords.push_back(std::move(r));
    }
    return OrderElem::from_coords(ring, coords);
}

Json json_of(const WittElem& w)
{
    Json out = Json::array();
    for (const auto& c : w.coords())
        out.push_back(json_of(c));
    return out;
}

Json json_of(const FqElem& x) { return Json(x.coeffs); }

Json json_of(const CyclicDecomp& d)
{
    Json summands = Json::array();
    for (const auto& f : d.factors()) {
        if (f.free) {
            summands.push_back(Json{{"order", "inf"}});
        } else {
            mpz_class o;
            mpz_ui_pow_ui(o.get_mpz_t(), d.prime(), f.exponent);
            summands.push_back(Json{{"order", json_of(o)}, {"exponent", f.exponent}});
        }
    }
    return Json{{"p", d.prime()},
                {"text", d.to_string()},
                {"summands", summands},
                {"precision_caveat", d.precision_caveat()}};
}

Json json_of(const SValuation& v)
{
    return Json{{"numerator", v.numerator},
                {"denominator", v.denominator},
                {"zero_at_precision", v.zero_at_precision},
                {"text", v.to_string()}};
}

Json json_of(const GrElem& g)
{
    return Json{{"level", {g.level, g.n}}, {"residue", json_of(g.residue)}};
}

Json json_of(const GrSubspace& s)
{
    Json basis = Json::array();
    for (const auto& b : s.basis())
        basis.push_back(json_of(b));
    return Json{{"level", {s.level(), s.degree()}}, {"dim", s.dim()}, {"basis", basis}};
}

Json json_of(const GroupCheckReport& r)
{
    return Json{{"p", r.p},
                {"n", r.n},
                {"k", r.k},
                {"l", r.l},
                {"trials", r.trials},
                {"mismatches", r.mismatches},
                {"degenerate", r.degenerate},
                {"failures", r.failures}};
}

Json json_of(const AbelianizationReport& r)
{
    Json levels = Json::array();
    for (const auto& ld : r.levels) {
        Json lj{{"level", {ld.level, r.n}},
                {"dim_bracket_span", ld.D.dim()},
                {"bracket_span_basis", json_of(ld.D)["basis"]},
                {"dim_quotient", ld.dim_quotient()},
                {"quotient_coords", ld.coords}};
        if (ld.p_target != 0) {
            lj["p_target"] = Json{ld.p_target, r.n};
            lj["p_matrix"] = ld.p_matrix;
        }
        levels.push_back(lj);
    }
    Json summands = Json::array();
    for (const auto& s : r.summands)
        summands.push_back(Json{{"start", s.start}, {"end", s.end}, {"length", s.length}, {"free", s.free}});
    return Json{{"p", r.p},
                {"n", r.n},
                {"max_level", r.max_level},
                {"levels", levels},
                {"chains", summands},
                {"assembled", json_of(r.assembled)},
                {"mod_p", json_of(r.mod_p)}};
}

Json json_of(const CohomologyGroup& h)
{
    return Json{{"group", json_of(h.decomp)}, {"labels", h.labels}};
}

Json json_of(const G1Cohomology& h)
{
    Json out = json_of(h.group);
    out["from_coker"] = json_of(h.from_coker);
    out["from_ker"] = json_of(h.from_ker);
    out["split_assumed"] = h.split_assumed;
    return out;
}

Json json_of(const Chart& c)
{
    Json entries = Json::array();
    for (const auto& [key, cell] : c.entries())
        for (const auto& x : cell) {
            Json order = x.order.free ? Json("inf") : Json(x.order.exponent);
            entries.push_back(Json{{"s", key.first},
                                   {"t", key.second},
                                   {"label", x.label.to_string(c.p())},
                                   {"order", order_to_string(x.order, c.p())},
                                   {"exponent", order}});
        }
    return Json{{"p", c.p()},
                {"page", c.page()},
                {"s_max", c.s_max()},
                {"horizon", c.horizon()},
                {"stems", {c.stem_lo(), c.stem_hi()}},
                {"entries", entries},
                {"log", c.log()}};
}

Json json_of(const HomotopyTable& t)
{
    Json out = Json::array();
    for (const auto& [stem, e] : t)
        out.push_back(Json{{"stem", stem}, {"group", json_of(e.group)}, {"provenance", e.provenance}});
    return out;
}

Json json_of(const std::vector<PsiValuationRow>& rows, unsigned long p)
{
    Json out = Json::array();
    for (const auto& r : rows) {
        mpz_class res = r.cofactor % mpz_class(p);
        out.push_back(Json{{"t", r.t},
                           {"valuation", r.valuation},
                           {"expected", r.expected},
                           {"cofactor_mod_p", res.get_ui()},
                           {"cofactor_bits", mpz_sizeinbase(r.cofactor.get_mpz_t(), 2)}});
    }
    return out;
}

}  // namespace morava
