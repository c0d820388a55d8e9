// morava: command-line front end to the morava core library.
// Exit codes: 0 success, 1 computation error, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "morava/error.hpp"
#include "morava/expr.hpp"
#include "morava/json_io.hpp"

using namespace morava;

namespace {

struct Globals {
    unsigned long p = 0;
    unsigned n = 0;
    unsigned M = kDefaultPrecision;
    bool json = false;
    std::vector<long> poly;
    CLI::Option* p_opt = nullptr;
    CLI::Option* n_opt = nullptr;

    unsigned long prime() const
    {
        if (p_opt->count() == 0)
            throw UsageError("--p is required");
        return p;
    }
    WittRingPtr ring(unsigned precision) const
    {
        if (p_opt->count() == 0 || n_opt->count() == 0)
            throw UsageError("--p and --n are required");
        if (poly.empty())
            return make_ring(p, n, precision);
        return make_ring(p, n, precision, poly);
    }
    WittRingPtr ring() const { return ring(M); }
    Json header() const
    {
        Json j{{"p", p}, {"M", M}};
        if (n_opt->count() > 0)
            j["n"] = n;
        return j;
    }
};

std::string precision_text(const WittRingPtr& r)
{
    return "S^" + std::to_string(r->degree() * r->precision());
}

std::string level_text(unsigned k, unsigned n)
{
    return SValuation{k, n, false}.to_string();
}

void emit(const Globals& g, const Json& j, const std::string& text)
{
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

WittElem parse_witt(const std::string& src, const WittRingPtr& r)
{
    OrderElem x = parse_element(src, r);
    for (unsigned i = 1; i < r->degree(); ++i)
        if (!x.coeff(i).is_zero())
            throw UsageError("expected an element of W(F_q) without S terms: " + src);
    return x.coeff(0);
}

FqElem parse_residue(const std::string& src, const Globals& g)
{
    auto r1 = g.ring(1);
    return residue(parse_element(src, r1).coeff(0));
}

// Symmetric representative in (-p^M/2, p^M/2], so small negatives read naturally.
std::string signed_text(const PadicInt& x)
{
    const mpz_class& m = x.params().modulus();
    return (2 * x.value() > m ? mpz_class(x.value() - m) : x.value()).get_str();
}

std::string witt_text(const WittElem& w) { return OrderElem::from_witt(w).to_string(); }

std::string digits_text(const ResidueField& F, const std::vector<FqElem>& ds)
{
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i)
        out += (i ? ", " : "") + F.to_string(ds[i]);
    return "(" + out + ")";
}

Json digits_json(const std::vector<FqElem>& ds)
{
    Json out = Json::array();
    for (const auto& d : ds)
        out.push_back(json_of(d));
    return out;
}

ZpMatrix parse_matrix(const std::string& src, const PadicParams& P)
{
    std::vector<std::vector<mpz_class>> rows;
    std::stringstream rs(src);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<mpz_class> r;
        std::stringstream es(row);
        std::string e;
        while (std::getline(es, e, ',')) {
            mpz_class v;
            const auto b = e.find_first_not_of(" \t"), t = e.find_last_not_of(" \t");
            if (b == std::string::npos || v.set_str(e.substr(b, t - b + 1), 10) != 0)
                throw UsageError("malformed matrix entry '" + e + "'");
            r.push_back(P.reduce(v));
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty() || rows.size() != rows[0].size())
        throw UsageError("operator matrix must be square, rows separated by ';'");
    ZpMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw UsageError("operator matrix must be square, rows separated by ';'");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string table_text(const HomotopyTable& t)
{
    std::ostringstream out;
    out << std::setw(6) << "stem" << "  " << std::left << std::setw(18) << "group" << "source\n" << std::right;
    for (const auto& [stem, e] : t) {
        std::string src;
        for (const auto& s : e.provenance)
            src += (src.empty() ? "" : "; ") + s;
        out << std::setw(6) << stem << "  " << std::left << std::setw(18) << e.group.to_string() << src << "\n"
            << std::right;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

void add_witt(CLI::App& app, Globals& g)
{
    auto* witt = app.add_subcommand("witt", "Witt vectors W(F_q) mod p^M")->require_subcommand(1);
    static std::string expr;
    static unsigned k = 1, count = 0;

    auto* tr = witt->add_subcommand("trace", "trace W(F_q) -> Z_p");
    tr->add_option("expr", expr, "element in w")->required();
    tr->callback([&g] {
        auto r = g.ring();
        PadicInt t = trace(parse_witt(expr, r));
        Json j = g.header();
        j["trace"] = json_of(t.value());
        emit(g, j, "tr = " + signed_text(t) + "\n");
    });

    auto* fr = witt->add_subcommand("frobenius", "Frobenius lift sigma^k");
    fr->add_option("expr", expr, "element in w")->required();
    fr->add_option("--k", k, "power of sigma")->capture_default_str();
    fr->callback([&g] {
        auto r = g.ring();
        WittElem s = frobenius_pow(parse_witt(expr, r), k);
        Json j = g.header();
        j["k"] = k;
        j["result"] = json_of(s);
        emit(g, j, "sigma^" + std::to_string(k) + "(x) = " + witt_text(s) + "\n");
    });

    auto* te = witt->add_subcommand("teich", "Teichmueller lift of the residue, or digit expansion");
    te->add_option("expr", expr, "element in w")->required();
    te->add_option("--digits", count, "print this many Teichmueller digits instead");
    te->callback([&g] {
        auto r = g.ring();
        const ResidueField& F = r->residue_field();
        WittElem w = parse_witt(expr, r);
        Json j = g.header();
        if (count > 0) {
            if (count > r->precision())
                throw UsageError("--digits must be <= M");
            auto ds = teich_digits(w, count);
            j["digits"] = digits_json(ds);
            emit(g, j, "digits " + digits_text(F, ds) + "\n");
            return;
        }
        const FqElem x = residue(w);
        WittElem t = teichmuller(r, x);
        j["residue"] = json_of(x);
        j["lift"] = json_of(t);
        emit(g, j, "teich(" + F.to_string(x) + ") = " + witt_text(t) + "\n");
    });
}

void add_order(CLI::App& app, Globals& g)
{
    auto* order = app.add_subcommand("order", "the order O_n")->require_subcommand(1);
    static std::string a, b;
    static unsigned count = 0;

    auto* mul = order->add_subcommand("mul", "product x*y");
    mul->add_option("x", a)->required();
    mul->add_option("y", b)->required();
    mul->callback([&g] {
        auto r = g.ring();
        OrderElem z = parse_element(a, r) * parse_element(b, r);
        Json j = g.header();
        j["result"] = json_of(z);
        emit(g, j, z.to_string() + "\n");
    });

    auto* inv = order->add_subcommand("inv", "inverse of a unit");
    inv->add_option("x", a)->required();
    inv->callback([&g] {
        auto r = g.ring();
        OrderElem z = unit_inverse_order(parse_element(a, r));
        Json j = g.header();
        j["result"] = json_of(z);
        emit(g, j, z.to_string() + "\n");
    });

    auto* val = order->add_subcommand("val", "S-adic valuation, v(S) = 1/n");
    val->add_option("x", a)->required();
    val->callback([&g] {
        auto r = g.ring();
        SValuation v = s_valuation(parse_element(a, r));
        Json j = g.header();
        j["valuation"] = json_of(v);
        emit(g, j, "v = " + v.to_string() + (v.zero_at_precision ? " (zero at precision " + precision_text(r) + ")" : "") +
                       "\n");
    });

    auto* dig = order->add_subcommand("digits", "Teichmueller S-digits x_0, x_1, ...");
    dig->add_option("x", a)->required();
    dig->add_option("--count", count, "number of digits (default 2n)");
    dig->callback([&g] {
        auto r = g.ring();
        const unsigned c = count == 0 ? 2 * r->degree() : count;
        if (c > r->degree() * r->precision())
            throw UsageError("--count must be <= nM");
        auto ds = s_digits(parse_element(a, r), c);
        Json j = g.header();
        j["digits"] = digits_json(ds);
        emit(g, j, "digits " + digits_text(r->residue_field(), ds) + "\n");
    });
}

void add_stab(CLI::App& app, Globals& g)
{
    auto* stab = app.add_subcommand("stab", "the Morava stabilizer group S_n")->require_subcommand(1);
    static std::string a, b;
    static unsigned long bound = 0;

    auto* ord = stab->add_subcommand("order", "order of an element");
    ord->add_option("x", a)->required();
    ord->add_option("--bound", bound, "search bound (default lcm(q-1, p^k) capped at 1000)");
    ord->callback([&g] {
        auto r = g.ring();
        StabElem x(parse_element(a, r));
        const unsigned long B = bound == 0 ? default_order_bound(r) : bound;
        auto o = element_order(x, B);
        Json j = g.header();
        j["bound"] = B;
        j["order"] = o ? Json(*o) : Json(nullptr);
        j["precision"] = precision_text(r);
        emit(g, j,
             (o ? "order " + std::to_string(*o) : "no finite order <= " + std::to_string(B)) + " (at precision " +
                 precision_text(r) + ")\n");
    });

    auto* comm = stab->add_subcommand("comm", "commutator x y x^-1 y^-1");
    comm->add_option("x", a)->required();
    comm->add_option("y", b)->required();
    comm->callback([&g] {
        auto r = g.ring();
        StabElem c = commutator(StabElem(parse_element(a, r)), StabElem(parse_element(b, r)));
        SValuation lv = filtration_level(c);
        Json j = g.header();
        j["result"] = json_of(c.value());
        j["level"] = json_of(lv);
        emit(g, j, c.value().to_string() + "\nlevel " + lv.to_string() + "\n");
    });

    auto* lev = stab->add_subcommand("level", "filtration level v(x - 1) and graded image");
    lev->add_option("x", a)->required();
    lev->callback([&g] {
        auto r = g.ring();
        StabElem x(parse_element(a, r));
        SValuation lv = filtration_level(x);
        Json j = g.header();
        j["level"] = json_of(lv);
        std::string text = "level " + lv.to_string();
        if (x.strict() && !x.is_one()) {
            GrElem gr = gr_project(x);
            j["gr"] = json_of(gr);
            text += ", gr = " + r->residue_field().to_string(gr.residue) + " in gr_" + level_text(gr.level, gr.n);
        }
        emit(g, j, text + "\n");
    });

    auto* norm = stab->add_subcommand("norm", "reduced norm in Z_p");
    norm->add_option("x", a)->required();
    norm->callback([&g] {
        auto r = g.ring();
        PadicInt v = reduced_norm_value(parse_element(a, r));
        Json j = g.header();
        j["norm"] = json_of(v.value());
        emit(g, j, "N(x) = " + signed_text(v) + "\n");
    });

    auto* split = stab->add_subcommand("split", "x = x1 * z with N(x1) = 1 and z central");
    split->add_option("x", a)->required();
    split->callback([&g] {
        auto r = g.ring();
        S1Split s = s1_split(StabElem(parse_element(a, r)));
        Json j = g.header();
        j["x1"] = json_of(s.x1.value());
        j["z"] = json_of(s.z.value());
        emit(g, j, "x1 = " + s.x1.value().to_string() + "\nz  = " + signed_text(s.z) + "\n");
    });

    auto* ink = stab->add_subcommand("inK", "membership in K (p=3, n=2)");
    ink->add_option("x", a)->required();
    ink->callback([&g] {
        auto r = g.ring();
        const bool in = in_K(StabElem(parse_element(a, r)));
        Json j = g.header();
        j["in_K"] = in;
        emit(g, j, std::string(in ? "true" : "false") + "\n");
    });
}

void add_grlie(CLI::App& app, Globals& g)
{
    auto* gr = app.add_subcommand("grlie", "graded Lie algebra of S_n")->require_subcommand(1);
    static std::string a, b;
    static unsigned k = 1, l = 1, trials = 50, L = 0;
    static std::uint64_t seed = 1;
    static bool power = false;

    auto* br = gr->add_subcommand("bracket", "[a@k/n, b@l/n]");
    br->add_option("a", a)->required();
    br->add_option("b", b)->required();
    br->add_option("--k", k)->capture_default_str();
    br->add_option("--l", l)->capture_default_str();
    br->callback([&g] {
        auto r = g.ring(1);
        const ResidueField& F = r->residue_field();
        GrElem x = gr_bracket(F, GrElem{k, g.n, parse_residue(a, g)}, GrElem{l, g.n, parse_residue(b, g)});
        Json j = g.header();
        j["result"] = json_of(x);
        emit(g, j, F.to_string(x.residue) + " in gr_" + level_text(x.level, x.n) + "\n");
    });

    auto* pw = gr->add_subcommand("power", "P(a@k/n), the graded p-th power");
    pw->add_option("a", a)->required();
    pw->add_option("--k", k)->capture_default_str();
    pw->callback([&g] {
        auto r = g.ring(1);
        const ResidueField& F = r->residue_field();
        GrElem x = gr_power(F, GrElem{k, g.n, parse_residue(a, g)});
        Json j = g.header();
        j["result"] = json_of(x);
        emit(g, j, F.to_string(x.residue) + " in gr_" + level_text(x.level, x.n) + "\n");
    });

    auto* span = gr->add_subcommand("span", "F_p-span of all brackets [a@k/n, b@l/n]");
    span->add_option("--k", k)->capture_default_str();
    span->add_option("--l", l)->capture_default_str();
    span->callback([&g] {
        auto r = g.ring(1);
        const ResidueField& F = r->residue_field();
        GrSubspace s = commutator_span(F, k, l);
        const GrSubspace ker = GrSubspace::trace_kernel(F);
        std::string rel;
        if (s == GrSubspace::full(F))
            rel = "equals F_q";
        else if (s == ker)
            rel = "equals ker(tr)";
        else if (s.is_subspace_of(ker))
            rel = "proper subspace of ker(tr)";
        else
            rel = "not contained in ker(tr)";
        std::string basis;
        for (const auto& v : s.basis())
            basis += (basis.empty() ? "" : ", ") + F.to_string(v);
        Json j = g.header();
        j["span"] = json_of(s);
        j["relation"] = rel;
        emit(g, j, "dim " + std::to_string(s.dim()) + ", basis {" + basis + "}, " + rel + "\n");
    });

    auto* check = gr->add_subcommand("check", "compare graded formulas with group computations");
    check->add_option("--k", k)->capture_default_str();
    check->add_option("--l", l)->capture_default_str();
    check->add_option("--trials", trials)->capture_default_str();
    check->add_option("--seed", seed)->capture_default_str();
    check->add_flag("--power", power, "check the p-th power map instead of the bracket");
    check->callback([&g] {
        auto r = g.ring();
        GroupCheckReport rep = power ? check_power_vs_group(r, k, trials, seed) : check_bracket_vs_group(r, k, l, trials, seed);
        Json j = g.header();
        j["kind"] = power ? "power" : "bracket";
        j["report"] = json_of(rep);
        std::ostringstream out;
        out << (power ? "power" : "bracket") << " k=" << k;
        if (!power)
            out << " l=" << l;
        out << ": " << rep.trials << " trials, " << rep.mismatches << " mismatches, " << rep.degenerate
            << " degenerate\n";
        for (const auto& f : rep.failures)
            out << "  " << f << "\n";
        emit(g, j, out.str());
        if (!rep.ok())
            throw ComputationError("graded formula disagrees with the group");
    });

    auto* ab = gr->add_subcommand("abelianize", "graded abelianization H_1(S_n; Z_p)");
    ab->add_option("--L", L, "top level numerator (default 4n)");
    ab->callback([&g] {
        auto r = g.ring(1);
        AbelianizationReport rep = abelianization_report(r->residue_field(), L == 0 ? 4 * g.n : L);
        Json j = g.header();
        j["report"] = json_of(rep);
        std::ostringstream out;
        out << std::setw(7) << "level" << std::setw(8) << "dim D" << std::setw(8) << "dim Q" << "  P\n";
        for (const auto& ld : rep.levels) {
            out << std::setw(7) << level_text(ld.level, rep.n) << std::setw(8) << ld.D.dim() << std::setw(8)
                << ld.dim_quotient() << "  ";
            if (ld.p_target == 0 || ld.dim_quotient() == 0) {
                out << "-";
            } else if (ld.p_matrix.empty()) {
                out << "-> " << level_text(ld.p_target, rep.n) << " 0";
            } else {
                out << "-> " << level_text(ld.p_target, rep.n) << " [";
                for (std::size_t i = 0; i < ld.p_matrix.size(); ++i) {
                    out << (i ? "; " : "");
                    for (std::size_t c = 0; c < ld.p_matrix[i].size(); ++c)
                        out << (c ? " " : "") << ld.p_matrix[i][c];
                }
                out << "]";
            }
            out << "\n";
        }
        for (const auto& s : rep.summands)
            out << "chain " << level_text(s.start, rep.n) << " .. " << level_text(s.end, rep.n) << ": "
                << (s.free ? CyclicDecomp::free_module(rep.p, 1) : CyclicDecomp::cyclic(rep.p, s.length)).to_string()
                << "\n";
        out << "H_1(S_n; Z_p) = " << rep.assembled.to_string() << "\n";
        out << "H_1(S_n; Z/p) = " << rep.mod_p.to_string() << "\n";
        emit(g, j, out.str());
    });
}

void add_homalg(CLI::App& app, Globals& g)
{
    auto* h = app.add_subcommand("homalg", "cohomology of Z_p, cyclic groups and G_1")->require_subcommand(1);
    static std::string op, lambda;
    static unsigned order = 2, s = 0;
    static long t = 0;

    auto make_module = [&g] {
        const PadicParams P(g.prime(), g.M);
        if (!lambda.empty()) {
            mpz_class v;
            if (v.set_str(lambda, 10) != 0)
                throw UsageError("malformed --lambda");
            return ZpModuleWithOperator::scalar(P, v);
        }
        if (op.empty())
            throw UsageError("give --op or --lambda");
        return ZpModuleWithOperator(P, parse_matrix(op, P));
    };
    auto group_json = [](const CohomologyGroup& c) { return json_of(c); };
    auto group_text = [](const CohomologyGroup& c) {
        std::string labels;
        for (const auto& l : c.labels)
            labels += (labels.empty() ? "" : ", ") + l;
        return c.decomp.to_string() + (labels.empty() ? "" : "   {" + labels + "}") +
               (c.decomp.precision_caveat() ? "   (free at precision)" : "");
    };

    auto* iw = h->add_subcommand("iwasawa", "H^0, H^1 of Z_p acting through one operator");
    iw->add_option("--op", op, "operator matrix, e.g. \"1,1;0,1\"");
    iw->add_option("--lambda", lambda, "scalar operator");
    iw->callback([&g, make_module, group_json, group_text] {
        auto [h0, h1] = iwasawa_cohomology(make_module());
        Json j = g.header();
        j["H0"] = group_json(h0);
        j["H1"] = group_json(h1);
        emit(g, j, "H^0 = " + group_text(h0) + "\nH^1 = " + group_text(h1) + "\n");
    });

    auto* cy = h->add_subcommand("cyclic", "H^s of a cyclic group");
    cy->add_option("--order", order, "group order")->capture_default_str();
    cy->add_option("--op", op, "generator action, e.g. \"-1\"");
    cy->add_option("--lambda", lambda, "scalar action");
    cy->add_option("--s", s, "degree")->capture_default_str();
    cy->callback([&g, make_module, group_json, group_text] {
        CohomologyGroup c = cyclic_cohomology(order, make_module(), s);
        Json j = g.header();
        j["s"] = s;
        j["H"] = group_json(c);
        emit(g, j, "H^" + std::to_string(s) + " = " + group_text(c) + "\n");
    });

    auto* g1 = h->add_subcommand("g1", "H^s(G_1, (E_1)_t)");
    g1->add_option("--s", s)->capture_default_str();
    g1->add_option("--t", t)->capture_default_str();
    g1->callback([&g, group_text] {
        G1Cohomology c = g1_cohomology_E1_detailed(g.prime(), s, t, g.M);
        Json j = g.header();
        j["s"] = s;
        j["t"] = t;
        j["H"] = json_of(c);
        std::string text = "H^" + std::to_string(s) + "(G_1, E_" + std::to_string(t) + ") = " + group_text(c.group) +
                           "\n  from coker(psi-1) on H^" + std::to_string(static_cast<int>(s) - 1) + "(F): " +
                           c.from_coker.to_string() + "\n  from ker(psi-1) on H^" + std::to_string(s) +
                           "(F): " + c.from_ker.to_string() + "\n";
        emit(g, j, text);
    });
}

void add_k1(CLI::App& app, Globals& g)
{
    auto* k1 = app.add_subcommand("k1", "the K(1)-local sphere and KO")->require_subcommand(1);
    static int from = -8, to = 16, smax = 0;
    static long tmax = 100;

    auto* e2 = k1->add_subcommand("e2", "E_2 chart H^s(G_1, (E_1)_t)");
    e2->add_option("--from", from, "lowest stem")->capture_default_str();
    e2->add_option("--to", to, "highest stem")->capture_default_str();
    e2->add_option("--smax", smax, "top row (default 3 for odd p, 8 for p = 2)");
    e2->callback([&g] {
        const unsigned long p = g.prime();
        const int top = smax > 0 ? smax : (p == 2 ? 8 : 3);
        Chart c = e2_page(p, top, from, to, g.M);
        Json j = g.header();
        j["chart"] = json_of(c);
        emit(g, j, render_grid(c));
    });

    auto* hom = k1->add_subcommand("homotopy", "pi_* of the K(1)-local sphere");
    hom->add_option("--from", from)->capture_default_str();
    hom->add_option("--to", to)->capture_default_str();
    hom->callback([&g] {
        HomotopyTable t = homotopy_table(g.prime(), from, to);
        Json j = g.header();
        j["stems"] = json_of(t);
        emit(g, j, table_text(t));
    });

    auto* ko = k1->add_subcommand("ko", "pi_* of KO Z_2");
    ko->add_option("--from", from)->capture_default_str();
    ko->add_option("--to", to)->capture_default_str();
    ko->callback([&g] {
        HomotopyTable t = ko_table(from, to);
        Json j{{"p", 2}, {"stems", json_of(t)}};
        emit(g, j, table_text(t));
    });

    auto* val = k1->add_subcommand("valuations", "exact valuations of psi^t - 1");
    val->add_option("--tmax", tmax)->capture_default_str();
    val->callback([&g] {
        const unsigned long p = g.prime();
        auto rows = psi_valuation_report(p, tmax);
        Json j = g.header();
        j["rows"] = json_of(rows, p);
        std::ostringstream out;
        out << std::setw(6) << "t" << std::setw(6) << "nu" << std::setw(10) << "expected" << std::setw(14)
            << "c mod p" << "\n";
        for (const auto& r : rows)
            out << std::setw(6) << r.t << std::setw(6) << r.valuation << std::setw(10) << r.expected
                << std::setw(14) << mpz_class(r.cofactor % p).get_str() << "\n";
        const auto bad = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.valuation != r.expected; });
        out << rows.size() - bad << " of " << rows.size() << " rows match\n";
        emit(g, j, out.str());
        if (bad > 0)
            throw ComputationError("valuation differs from the closed form");
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Morava stabilizer groups, their graded Lie algebra and the K(1)-local sphere"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    g.p_opt = app.add_option("--p", g.p, "prime");
    g.n_opt = app.add_option("--n", g.n, "height / residue degree");
    app.add_option("--prec", g.M, "Witt precision M")->capture_default_str();
    app.add_option("--poly", g.poly, "monic defining polynomial for F_q, low degree first, e.g. 2,1,1")
        ->delimiter(',');
    app.add_flag("--json", g.json, "JSON output");

    add_witt(app, g);
    add_order(app, g);
    add_stab(app, g);
    add_grlie(app, g);
    add_homalg(app, g);
    add_k1(app, g);
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({}))
            leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
