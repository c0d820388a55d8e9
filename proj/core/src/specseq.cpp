#include "morava/specseq.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

namespace morava {

namespace {

int floor_mod(int a, int m)
{
    int r = a % m;
    return r < 0 ? r + m : r;
}

std::string power_str(const char* name, int e)
{
    if (e == 0)
        return "";
    std::string s = name;
    if (e != 1)
        s += "^" + std::to_string(e);
    return s;
}

std::string where(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

}  // namespace

std::pair<int, int> Monomial::bidegree() const
{
    return {eta + zeta + 2 * y + x, 2 * eta - 2 * x - 2 * u};
}

Monomial Monomial::times(const Monomial& o) const
{
    return Monomial{coeff + o.coeff, zeta + o.zeta, eta + o.eta, y + o.y, x + o.x, u + o.u};
}

std::string Monomial::to_string(unsigned long p) const
{
    std::vector<std::string> parts;
    if (coeff > 0) {
        mpz_class c;
        mpz_ui_pow_ui(c.get_mpz_t(), p, static_cast<unsigned long>(coeff));
        parts.push_back(c.get_str());
    }
    for (auto [name, e] : {std::pair{"zeta", zeta}, {"eta", eta}, {"y", y}, {"x", x}, {"u", u}}) {
        std::string f = power_str(name, e);
        if (!f.empty())
            parts.push_back(f);
    }
    if (parts.empty())
        return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += "*" + parts[i];
    return out;
}

std::string order_to_string(const CyclicFactor& f, unsigned long p)
{
    if (f.free)
        return "Z_" + std::to_string(p);
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), p, f.exponent);
    return "Z/" + c.get_str();
}

bool DifferentialRule::matches(const Monomial& m) const
{
    if (u_modulus > 0 && floor_mod(m.u - u_residue, u_modulus) != 0)
        return false;
    if (zeta >= 0 && m.zeta != zeta)
        return false;
    return m.eta >= min_eta;
}

Chart::Chart(unsigned long p, int page, int s_max, int stem_lo, int stem_hi)
    : p_(p), page_(page), s_max_(s_max), stem_lo_(stem_lo), stem_hi_(stem_hi), horizon_(s_max)
{
    if (s_max < 0 || stem_lo > stem_hi || page < 1)
        throw UsageError("invalid chart range");
}

bool Chart::in_range(int s, int t) const
{
    return s >= 0 && s <= s_max_ && t - s >= stem_lo_ && t - s <= stem_hi_;
}

void Chart::add(int s, int t, Summand x)
{
    if (!in_range(s, t))
        throw UsageError("summand " + where(s, t) + " outside chart range");
    if (x.label.bidegree() != Bidegree{s, t})
        throw UsageError("label " + x.label.to_string(p_) + " does not live in " + where(s, t));
    if (!x.order.free && x.order.exponent == 0)
        return;
    auto& cell = entries_[{s, t}];
    for (const auto& e : cell)
        if (e.label == x.label)
            throw UsageError("duplicate label " + x.label.to_string(p_) + " at " + where(s, t));
    cell.push_back(std::move(x));
}

const std::vector<Summand>& Chart::at(int s, int t) const
{
    static const std::vector<Summand> empty;
    auto it = entries_.find({s, t});
    return it == entries_.end() ? empty : it->second;
}

bool operator==(const Chart& a, const Chart& b)
{
    if (a.p_ != b.p_ || a.s_max_ != b.s_max_ || a.stem_lo_ != b.stem_lo_ || a.stem_hi_ != b.stem_hi_ ||
        a.entries_.size() != b.entries_.size())
        return false;
    for (const auto& [key, cell] : a.entries_) {
        auto it = b.entries_.find(key);
        if (it == b.entries_.end() || it->second.size() != cell.size())
            return false;
        for (const auto& x : cell) {
            bool found = false;
            for (const auto& y : it->second)
                if (x.label == y.label && x.order == y.order)
                    found = true;
            if (!found)
                return false;
        }
    }
    return true;
}

Chart apply_differentials(const Chart& c, const std::vector<DifferentialRule>& rules)
{
    const int r = c.page();
    for (const auto& rule : rules) {
        if (rule.page != r)
            throw UsageError("rule " + rule.name + " is for page " + std::to_string(rule.page));
        if (rule.multiplier.bidegree() != Bidegree{r, r - 1})
            throw UsageError("rule " + rule.name + " does not have bidegree (r, r-1)");
    }

    struct Hit {
        Bidegree src;
        std::size_t src_idx;
        Bidegree tgt;
        std::size_t tgt_idx;
        const DifferentialRule* rule;
    };
    std::vector<Hit> hits;
    std::vector<std::string> log = c.log();
    std::set<std::pair<Bidegree, std::size_t>> sources, targets;

    for (const auto& [key, cell] : c.entries()) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            for (const auto& rule : rules) {
                if (!rule.matches(cell[i].label))
                    continue;
                Monomial tl = cell[i].label.times(rule.multiplier);
                Bidegree tk{key.first + r, key.second + r - 1};
                if (!c.in_range(tk.first, tk.second)) {
                    log.push_back("E" + std::to_string(r) + ": " + rule.name + " on " +
                                  cell[i].label.to_string(c.p()) + " leaves the chart; left unresolved");
                    continue;
                }
                const auto& tcell = c.at(tk.first, tk.second);
                std::size_t ti = tcell.size();
                for (std::size_t j = 0; j < tcell.size(); ++j)
                    if (tcell[j].label == tl)
                        ti = j;
                if (ti == tcell.size())
                    throw ComputationError("inconsistent differential: " + rule.name + " target " +
                                           tl.to_string(c.p()) + " missing at " + where(tk.first, tk.second));
                if (!sources.insert({key, i}).second)
                    throw ComputationError("inconsistent differential: two rules act on " +
                                           cell[i].label.to_string(c.p()));
                if (!targets.insert({tk, ti}).second)
                    throw ComputationError("inconsistent differential: target " + tl.to_string(c.p()) +
                                           " hit twice");
                hits.push_back(Hit{key, i, tk, ti, &rule});
            }
        }
    }
    for (const auto& s : sources)
        if (targets.count(s))
            throw ComputationError("inconsistent differential: class is both source and target");

    Chart out(c.p(), r + 1, c.s_max(), c.stem_lo(), c.stem_hi());
    out.horizon_ = rules.empty() ? c.horizon() : std::min(c.horizon(), c.s_max() - r);
    std::map<std::pair<Bidegree, std::size_t>, std::optional<Summand>> replaced;
    for (const auto& h : hits) {
        const Summand& src = c.at(h.src.first, h.src.second)[h.src_idx];
        const Summand& tgt = c.at(h.tgt.first, h.tgt.second)[h.tgt_idx];
        if (tgt.order.free)
            throw ComputationError("inconsistent differential: free target " + tgt.label.to_string(c.p()));
        const unsigned b = tgt.order.exponent;
        std::optional<Summand> kernel;
        if (src.order.free) {
            Monomial l = src.label;
            l.coeff += static_cast<int>(b);
            kernel = Summand{src.order, l};
        } else if (src.order.exponent > b) {
            Monomial l = src.label;
            l.coeff += static_cast<int>(b);
            kernel = Summand{CyclicFactor{false, src.order.exponent - b}, l};
        } else if (src.order.exponent < b) {
            throw ComputationError("inconsistent differential: source " + src.label.to_string(c.p()) +
                                   " smaller than target " + tgt.label.to_string(c.p()));
        }
        replaced[{h.src, h.src_idx}] = kernel;
        std::string line = "E" + std::to_string(r) + ": " + h.rule->name + ": d" + std::to_string(r) + "(" +
                           src.label.to_string(c.p()) + ") = " + tgt.label.to_string(c.p());
        log.push_back(line);
    }
    for (const auto& [key, cell] : c.entries()) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (targets.count({key, i}))
                continue;
            auto it = replaced.find({key, i});
            if (it == replaced.end())
                out.add(key.first, key.second, cell[i]);
            else if (it->second)
                out.add(key.first, key.second, *it->second);
        }
    }
    out.log_ = std::move(log);
    return out;
}

bool collapse_check(const Chart& c, int r_from)
{
    const int h = c.horizon();
    for (const auto& [key, cell] : c.entries()) {
        const int stem = key.second - key.first;
        // Edge stems may hold classes whose partners lie outside the chart.
        if (cell.empty() || key.first > h || stem - 1 <= c.stem_lo() || stem >= c.stem_hi())
            continue;
        for (int r = std::max(r_from, 2); key.first + r <= h; ++r)
            if (!c.at(key.first + r, key.second + r - 1).empty())
                return false;
    }
    return true;
}

bool sparse_at(const Chart& c, int r)
{
    for (const auto& [key, cell] : c.entries()) {
        const int stem = key.second - key.first;
        if (cell.empty() || stem - 1 <= c.stem_lo() || stem >= c.stem_hi())
            continue;
        if (key.first + r <= c.horizon() && !c.at(key.first + r, key.second + r - 1).empty())
            return false;
    }
    return true;
}

ExtensionConfig ExtensionConfig::p2_default()
{
    return ExtensionConfig{{
        {2, 8, 3, true, "stems 3 mod 8: Z/4 + Z/2 extends to Z/8"},
        {2, 8, 1, false, "stems 1 mod 8: extensions trivial"},
    }};
}

const ExtensionRule* ExtensionConfig::find(unsigned long p, int stem) const
{
    for (const auto& r : rules)
        if (r.p == p && floor_mod(stem - r.residue, r.modulus) == 0)
            return &r;
    return nullptr;
}

std::map<int, StemEntry> assemble_stems(const Chart& c, const ExtensionConfig& ext, int lo, int hi)
{
    if (lo > hi)
        throw UsageError("empty stem range");
    if (lo - 2 < c.stem_lo() || hi + 2 > c.stem_hi())
        throw UsageError("chart must cover stems lo-2 .. hi+2");
    if (!collapse_check(c, c.page()))
        throw ComputationError("chart has not collapsed at E" + std::to_string(c.page()));
    std::map<int, StemEntry> out;
    for (int i = lo; i <= hi; ++i)
        out[i] = StemEntry{CyclicDecomp(c.p()), {}};
    for (const auto& [key, cell] : c.entries()) {
        const int stem = key.second - key.first;
        if (stem < lo || stem > hi || key.first > c.horizon())
            continue;
        if (key.first == c.horizon() && !cell.empty())
            throw ComputationError("classes on the horizon row in stem " + std::to_string(stem) +
                                   "; raise s_max");
        for (const auto& x : cell) {
            out[stem].group.add(x.order);
            out[stem].provenance.push_back(where(key.first, key.second) + " " + x.label.to_string(c.p()) + " " +
                                           order_to_string(x.order, c.p()));
        }
    }
    for (auto& [stem, entry] : out) {
        const ExtensionRule* rule = ext.find(c.p(), stem);
        if (!rule || entry.group.num_summands() < 2)
            continue;
        entry.provenance.push_back("extension: " + rule->anchor);
        if (!rule->nontrivial)
            continue;
        if (entry.group.free_rank() > 0)
            throw ComputationError("nontrivial extension rule on a stem with a free summand");
        entry.group = CyclicDecomp::cyclic(c.p(), entry.group.torsion_log_order());
    }
    return out;
}

std::string render_grid(const Chart& c)
{
    int t_lo = 0, t_hi = 0;
    bool any = false;
    for (const auto& [key, cell] : c.entries()) {
        if (cell.empty() || key.first > c.horizon())
            continue;
        t_lo = any ? std::min(t_lo, key.second) : key.second;
        t_hi = any ? std::max(t_hi, key.second) : key.second;
        any = true;
    }
    std::ostringstream out;
    out << "E" << c.page() << " (p=" << c.p() << ", stems " << c.stem_lo() << ".." << c.stem_hi()
        << ", rows 0.." << c.horizon() << ")\n";
    if (!any) {
        out << "(empty)\n";
        return out.str();
    }
    auto cell_text = [&](int s, int t) {
        std::string txt;
        for (const auto& x : c.at(s, t)) {
            if (!txt.empty())
                txt += "+";
            txt += x.order.free ? std::string("Z") : order_to_string(x.order, c.p()).substr(2);
        }
        return txt.empty() ? std::string(".") : txt;
    };
    std::size_t width = 3;
    for (int s = 0; s <= c.horizon(); ++s)
        for (int t = t_lo; t <= t_hi; ++t)
            width = std::max(width, cell_text(s, t).size() + 1);
    width = std::max(width, std::to_string(t_lo).size() + 1);
    for (int s = c.horizon(); s >= 0; --s) {
        out << std::setw(4) << s << " |";
        for (int t = t_lo; t <= t_hi; ++t)
            out << std::setw(static_cast<int>(width)) << cell_text(s, t);
        out << "\n";
    }
    out << "     +" << std::string(width * static_cast<std::size_t>(t_hi - t_lo + 1), '-') << "\n";
    out << "   t  ";
    for (int t = t_lo; t <= t_hi; ++t)
        out << std::setw(static_cast<int>(width)) << t;
    out << "\n";
    for (const auto& [key, cell] : c.entries())
        if (key.first <= c.horizon())
            for (const auto& x : cell)
                out << "  " << where(key.first, key.second) << " " << x.label.to_string(c.p()) << " "
                    << order_to_string(x.order, c.p()) << "\n";
    return out.str();
}

}  // namespace morava
