#include "morava/grlie.hpp"

#include <random>
#include <sstream>

namespace morava {

namespace {

unsigned inv_mod(unsigned a, unsigned long p)
{
    unsigned long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

// a^{(p^{pk}-1)/(p^k-1)} = prod_{r<p} a^{p^{rk}}
ResidueField::Code norm_like_power(const ResidueField& F, ResidueField::Code a, unsigned k)
{
    ResidueField::Code out = F.encode(F.one());
    for (unsigned long r = 0; r < F.p(); ++r)
        out = F.mul(out, F.frob(a, static_cast<unsigned>(r * k)));
    return out;
}

OrderElem s_power_term(const WittRingPtr& ring, const WittElem& a, unsigned k)
{
    return OrderElem::from_witt(a) * OrderElem::uniformizer(ring).pow(k);
}

std::string describe(const ResidueField& F, const GrElem& g)
{
    std::ostringstream out;
    out << F.to_string(g.residue) << "@" << g.level << "/" << g.n;
    return out.str();
}

// Rank of an F_p matrix (rows x cols, row-major vectors).
std::size_t rank_fp(std::vector<std::vector<unsigned>> m, unsigned long p)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        unsigned inv = inv_mod(m[rank][c], p);
        for (auto& x : m[rank])
            x = static_cast<unsigned>(x * static_cast<unsigned long>(inv) % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            unsigned long f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] = static_cast<unsigned>((m[r][j] + (p - f) * m[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

// (rows_a x inner) * (inner x cols_b)
std::vector<std::vector<unsigned>> mul_fp(const std::vector<std::vector<unsigned>>& a,
                                          const std::vector<std::vector<unsigned>>& b, std::size_t inner,
                                          std::size_t cols, unsigned long p)
{
    std::vector<std::vector<unsigned>> out(a.size(), std::vector<unsigned>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] = static_cast<unsigned>((out[i][j] + static_cast<unsigned long>(a[i][k]) * b[k][j]) % p);
        }
    return out;
}

}  // namespace

unsigned phi_level(unsigned k, unsigned n, unsigned long p)
{
    unsigned long pk = p * k;
    return static_cast<unsigned>(std::min<unsigned long>(k + n, pk));
}

GrElem gr_bracket(const ResidueField& F, const GrElem& a, const GrElem& b)
{
    if (a.n != b.n || a.n != F.degree())
        throw UsageError("bracket operands live in different fields");
    auto ac = F.encode(a.residue), bc = F.encode(b.residue);
    auto r = F.sub(F.mul(ac, F.frob(bc, a.level)), F.mul(bc, F.frob(ac, b.level)));
    return GrElem{a.level + b.level, a.n, F.decode(r)};
}

GrElem gr_power(const ResidueField& F, const GrElem& a)
{
    if (a.n != F.degree())
        throw UsageError("operand lives in a different field");
    const unsigned long p = F.p();
    const unsigned k = a.level;
    auto ac = F.encode(a.residue);
    const unsigned long lhs = (p - 1) * k;
    if (lhs < a.n)
        return GrElem{static_cast<unsigned>(p * k), a.n, F.decode(norm_like_power(F, ac, k))};
    if (lhs == a.n)
        return GrElem{static_cast<unsigned>(p * k), a.n, F.decode(F.add(ac, norm_like_power(F, ac, k)))};
    return GrElem{k + a.n, a.n, a.residue};
}

GroupCheckReport check_bracket_vs_group(const WittRingPtr& ring, unsigned k, unsigned l, unsigned trials,
                                        std::uint64_t seed)
{
    const unsigned n = ring->degree();
    if (k < 1 || l < 1 || k + l > n * ring->precision() - 1)
        throw UsageError("need 1 <= k, l and k + l <= nM - 1");
    const ResidueField& F = ring->residue_field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ResidueField::Code> pick(0, F.size() - 1);
    GroupCheckReport rep{ring->p(), n, k, l, trials, 0, 0, {}};
    const OrderElem one = OrderElem::one(ring);
    for (unsigned t = 0; t < trials; ++t) {
        FqElem a = F.decode(pick(rng)), b = F.decode(pick(rng));
        StabElem x(one + s_power_term(ring, teichmuller(ring, a), k));
        StabElem y(one + s_power_term(ring, teichmuller(ring, b), l));
        StabElem c = commutator(x, y);
        GrElem expect = gr_bracket(F, GrElem{k, n, a}, GrElem{l, n, b});
        bool good;
        if (expect.residue.is_zero()) {
            ++rep.degenerate;
            FiltrationLevel v = filtration_level(c);
            good = v.zero_at_precision || v.numerator > k + l;
        } else {
            good = !c.is_one() && gr_project(c) == expect;
        }
        if (!good) {
            ++rep.mismatches;
            rep.failures.push_back("[" + F.to_string(a) + ", " + F.to_string(b) + "] expected " +
                                   describe(F, expect));
        }
    }
    return rep;
}

GroupCheckReport check_power_vs_group(const WittRingPtr& ring, unsigned k, unsigned trials, std::uint64_t seed)
{
    const unsigned n = ring->degree();
    const unsigned long p = ring->p();
    if (k < 1 || phi_level(k, n, p) > n * ring->precision() - 1)
        throw UsageError("need k >= 1 and phi(k) <= nM - 1");
    const ResidueField& F = ring->residue_field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ResidueField::Code> pick(0, F.size() - 1);
    GroupCheckReport rep{p, n, k, 0, trials, 0, 0, {}};
    const OrderElem one = OrderElem::one(ring);
    for (unsigned t = 0; t < trials; ++t) {
        FqElem a = F.decode(pick(rng));
        StabElem x(one + s_power_term(ring, teichmuller(ring, a), k));
        StabElem xp = x.pow(p);
        GrElem expect = gr_power(F, GrElem{k, n, a});
        bool good;
        if (expect.residue.is_zero()) {
            ++rep.degenerate;
            FiltrationLevel v = filtration_level(xp);
            good = v.zero_at_precision || v.numerator > expect.level;
        } else {
            good = !xp.is_one() && gr_project(xp) == expect;
        }
        if (!good) {
            ++rep.mismatches;
            rep.failures.push_back("P(" + F.to_string(a) + "@" + std::to_string(k) + ") expected " +
                                   describe(F, expect));
        }
    }
    return rep;
}

GrSubspace::GrSubspace(unsigned long p, unsigned n, unsigned level) : p_(p), n_(n), level_(level) {}

GrSubspace GrSubspace::full(const ResidueField& F, unsigned level)
{
    GrSubspace s(F.p(), F.degree(), level);
    for (unsigned i = 0; i < F.degree(); ++i) {
        FqElem e = F.zero();
        e.coeffs[i] = 1;
        s.insert(e);
    }
    return s;
}

GrSubspace GrSubspace::trace_kernel(const ResidueField& F, unsigned level)
{
    GrSubspace s(F.p(), F.degree(), level);
    for (ResidueField::Code c = 0; c < F.size() && s.dim() + 1 < F.degree(); ++c)
        if (F.trace(c) == 0)
            s.insert(F.decode(c));
    return s;
}

FqElem GrSubspace::reduce(const FqElem& v) const
{
    FqElem r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        unsigned long f = r.coeffs[pivots_[i]];
        if (f == 0)
            continue;
        for (unsigned j = 0; j < n_; ++j)
            r.coeffs[j] = static_cast<unsigned>((r.coeffs[j] + (p_ - f) * rows_[i].coeffs[j]) % p_);
    }
    return r;
}

bool GrSubspace::contains(const FqElem& v) const { return reduce(v).is_zero(); }

bool GrSubspace::insert(const FqElem& v)
{
    FqElem r = reduce(v);
    unsigned piv = 0;
    while (piv < n_ && r.coeffs[piv] == 0)
        ++piv;
    if (piv == n_)
        return false;
    unsigned long inv = inv_mod(r.coeffs[piv], p_);
    for (auto& x : r.coeffs)
        x = static_cast<unsigned>(x * inv % p_);
    for (auto& row : rows_) {
        unsigned long f = row.coeffs[piv];
        if (f == 0)
            continue;
        for (unsigned j = 0; j < n_; ++j)
            row.coeffs[j] = static_cast<unsigned>((row.coeffs[j] + (p_ - f) * r.coeffs[j]) % p_);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv)
        ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), r);
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
}

void GrSubspace::add(const GrSubspace& other)
{
    for (const auto& v : other.rows_)
        insert(v);
}

bool GrSubspace::is_subspace_of(const GrSubspace& other) const
{
    for (const auto& v : rows_)
        if (!other.contains(v))
            return false;
    return true;
}

GrSubspace commutator_span(const ResidueField& F, unsigned k, unsigned l)
{
    using Code = ResidueField::Code;
    const Code q = F.size();
    if (q > (1u << 16))
        throw ComputationError("brute force out of range (q > 2^16)");
    std::vector<Code> fk(q), fl(q);
    for (Code c = 0; c < q; ++c) {
        fk[c] = F.frob(c, k);
        fl[c] = F.frob(c, l);
    }
    GrSubspace span(F.p(), F.degree(), k + l);
    std::vector<char> in_span(q, 0);
    in_span[0] = 1;
    auto refresh = [&]() {
        // Enumerate all F_p-combinations of the basis.
        std::fill(in_span.begin(), in_span.end(), 0);
        std::vector<Code> elems{0};
        for (const auto& b : span.basis()) {
            Code bc = F.encode(b);
            std::vector<Code> next;
            next.reserve(elems.size() * F.p());
            for (Code e : elems) {
                Code cur = e;
                for (unsigned long m = 0; m < F.p(); ++m) {
                    next.push_back(cur);
                    cur = F.add(cur, bc);
                }
            }
            elems.swap(next);
        }
        for (Code e : elems)
            in_span[e] = 1;
    };
    for (Code a = 1; a < q && span.dim() < F.degree(); ++a)
        for (Code b = 1; b < q; ++b) {
            Code r = F.sub(F.mul(a, fk[b]), F.mul(b, fl[a]));
            if (in_span[r])
                continue;
            span.insert(F.decode(r));
            refresh();
            if (span.dim() == F.degree())
                break;
        }
    return span;
}

GrSubspace commutator_span(unsigned long p, unsigned n, unsigned k, unsigned l)
{
    unsigned long q = 1;
    for (unsigned i = 0; i < n && q <= (1ul << 16); ++i)
        q *= p;
    if (q > (1ul << 16))
        throw ComputationError("brute force out of range (q > 2^16)");
    auto ring = make_ring(p, n, 1);
    return commutator_span(ring->residue_field(), k, l);
}

AbelianizationReport abelianization_report(unsigned long p, unsigned n, unsigned L)
{
    auto ring = make_ring(p, n, 1);
    return abelianization_report(ring->residue_field(), L);
}

AbelianizationReport abelianization_report(const ResidueField& F, unsigned L)
{
    const unsigned long p = F.p();
    const unsigned n = F.degree();
    if (L < 1)
        throw UsageError("max level must be >= 1");
    AbelianizationReport rep;
    rep.p = p;
    rep.n = n;
    rep.max_level = L;

    // Per-level bracket spans and quotient coordinates.
    for (unsigned k = 1; k <= L; ++k) {
        LevelData ld{k, GrSubspace(p, n, k), {}, 0, {}};
        for (unsigned k1 = 1; k1 < k && ld.D.dim() < n; ++k1)
            ld.D.add(commutator_span(F, k1, k - k1));
        std::vector<char> is_pivot(n, 0);
        for (unsigned c : ld.D.pivots())
            is_pivot[c] = 1;
        for (unsigned c = 0; c < n; ++c)
            if (!is_pivot[c])
                ld.coords.push_back(c);
        rep.levels.push_back(std::move(ld));
    }
    auto project = [&](unsigned level, const FqElem& v) {
        const LevelData& ld = rep.levels[level - 1];
        FqElem r = ld.D.reduce(v);
        std::vector<unsigned> out;
        for (unsigned c : ld.coords)
            out.push_back(r.coeffs[c]);
        return out;
    };

    // Induced P maps, checked for well-definedness and linearity on all of F_q.
    for (unsigned k = 1; k <= L; ++k) {
        LevelData& ld = rep.levels[k - 1];
        const unsigned tgt = phi_level(k, n, p);
        if (tgt > L)
            continue;
        ld.p_target = tgt;
        const std::size_t dq = ld.dim_quotient();
        const std::size_t dt = rep.levels[tgt - 1].dim_quotient();
        ld.p_matrix.assign(dt, std::vector<unsigned>(dq, 0));
        for (std::size_t j = 0; j < dq; ++j) {
            FqElem e = F.zero();
            e.coeffs[ld.coords[j]] = 1;
            auto img = project(tgt, gr_power(F, GrElem{k, n, e}).residue);
            for (std::size_t i = 0; i < dt; ++i)
                ld.p_matrix[i][j] = img[i];
        }
        for (ResidueField::Code c = 0; c < F.size(); ++c) {
            FqElem a = F.decode(c);
            auto src = project(k, a);
            auto img = project(tgt, gr_power(F, GrElem{k, n, a}).residue);
            for (std::size_t i = 0; i < dt; ++i) {
                unsigned long s = 0;
                for (std::size_t j = 0; j < dq; ++j)
                    s += static_cast<unsigned long>(ld.p_matrix[i][j]) * src[j];
                if (s % p != img[i])
                    throw ComputationError("induced p-th power map is not linear on Q_" + std::to_string(k) +
                                           "/" + std::to_string(n));
            }
        }
    }

    // phi is strictly increasing, so levels split into chains k -> phi(k) -> ...
    std::vector<char> has_pred(L + 1, 0);
    for (unsigned k = 1; k <= L; ++k)
        if (rep.levels[k - 1].p_target != 0)
            has_pred[rep.levels[k - 1].p_target] = 1;

    CyclicDecomp assembled(p);
    std::size_t generators = 0;
    for (unsigned start = 1; start <= L; ++start) {
        if (has_pred[start])
            continue;
        std::vector<unsigned> chain{start};
        while (rep.levels[chain.back() - 1].p_target != 0)
            chain.push_back(rep.levels[chain.back() - 1].p_target);
        const std::size_t m = chain.size();
        std::vector<std::size_t> d(m);
        for (std::size_t i = 0; i < m; ++i)
            d[i] = rep.levels[chain[i] - 1].dim_quotient();
        // rank of the composite V_a -> V_b
        auto rank = [&](long a, long b) -> long {
            if (a < 0 || b >= static_cast<long>(m))
                return 0;
            if (a == b)
                return static_cast<long>(d[a]);
            std::vector<std::vector<unsigned>> comp = rep.levels[chain[a] - 1].p_matrix;
            for (long i = a + 1; i < b; ++i)
                comp = mul_fp(rep.levels[chain[i] - 1].p_matrix, comp, d[i], d[a], p);
            return static_cast<long>(rank_fp(comp, p));
        };
        for (long a = 0; a < static_cast<long>(m); ++a) {
            generators += d[a] - static_cast<std::size_t>(a > 0 ? rank(a - 1, a) : 0);
            for (long b = a; b < static_cast<long>(m); ++b) {
                long mult = rank(a, b) - rank(a - 1, b) - rank(a, b + 1) + rank(a - 1, b + 1);
                for (long r = 0; r < mult; ++r) {
                    ChainSummand cs{chain[a], chain[b], static_cast<unsigned>(b - a + 1),
                                    b == static_cast<long>(m) - 1};
                    rep.summands.push_back(cs);
                    if (cs.free) {
                        assembled.add_free();
                        assembled.set_precision_caveat();
                    } else {
                        assembled.add_cyclic(cs.length);
                    }
                }
            }
        }
    }
    if (generators != rep.summands.size())
        throw ComputationError("interval decomposition disagrees with cokernel count");
    rep.assembled = assembled;
    rep.mod_p = CyclicDecomp(p);
    rep.mod_p.add_cyclic(1, generators);
    return rep;
}

}  // namespace morava
