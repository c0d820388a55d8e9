#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morava/padic.hpp"

namespace morava {

// p^coeff * zeta^zeta * eta^eta * y^y * x^x * u^u.
// Bidegrees (s, t): u (0,-2), eta (1,2), zeta (1,0), y (2,0), x (1,-2).
struct Monomial {
    int coeff = 0;
    int zeta = 0;
    int eta = 0;
    int y = 0;
    int x = 0;
    int u = 0;

    std::pair<int, int> bidegree() const;
    Monomial times(const Monomial& o) const;
    std::string to_string(unsigned long p) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Summand {
    CyclicFactor order;
    Monomial label;
};

using Bidegree = std::pair<int, int>;  // (s, t)

// d_r(m) = m * multiplier for every summand label m with
// u-exponent = u_residue mod u_modulus, zeta-exponent `zeta` (-1: any) and
// eta-exponent >= min_eta.  Each rule carries its own source anchor.
struct DifferentialRule {
    std::string name;
    int page = 3;
    int u_modulus = 1;
    int u_residue = 0;
    int zeta = -1;
    int min_eta = 0;
    Monomial multiplier;

    bool matches(const Monomial& m) const;
};

// Page E_r restricted to 0 <= s <= s_max and stems t - s in [stem_lo, stem_hi].
class Chart {
public:
    Chart(unsigned long p, int page, int s_max, int stem_lo, int stem_hi);

    unsigned long p() const { return p_; }
    int page() const { return page_; }
    int s_max() const { return s_max_; }
    int stem_lo() const { return stem_lo_; }
    int stem_hi() const { return stem_hi_; }
    // Rows s <= horizon are unaffected by the truncation at s_max.
    int horizon() const { return horizon_; }

    bool in_range(int s, int t) const;
    // Validates range, label bidegree and label uniqueness.
    void add(int s, int t, Summand x);
    const std::vector<Summand>& at(int s, int t) const;
    const std::map<Bidegree, std::vector<Summand>>& entries() const { return entries_; }
    const std::vector<std::string>& log() const { return log_; }

    friend bool operator==(const Chart& a, const Chart& b);

private:
    friend Chart apply_differentials(const Chart& c, const std::vector<DifferentialRule>& rules);

    unsigned long p_;
    int page_;
    int s_max_;
    int stem_lo_;
    int stem_hi_;
    int horizon_;
    std::map<Bidegree, std::vector<Summand>> entries_;
    std::vector<std::string> log_;
};

// Next page.  Targets are removed, sources are replaced by their kernels.
// Throws ComputationError on an inconsistent rule application.
Chart apply_differentials(const Chart& c, const std::vector<DifferentialRule>& rules);

// True iff no nonzero bidegrees below the horizon are joined by a d_r, r >= r_from.
// Pairs touching the two edge stems are skipped: their partners may lie
// outside the chart.
bool collapse_check(const Chart& c, int r_from);
// True iff no d_r (this r only) can connect two nonzero bidegrees.
bool sparse_at(const Chart& c, int r);

struct ExtensionRule {
    unsigned long p = 2;
    int modulus = 8;
    int residue = 0;
    bool nontrivial = false;
    std::string anchor;
};

struct ExtensionConfig {
    std::vector<ExtensionRule> rules;

    // p = 2: stems 3 mod 8 nontrivial, stems 1 mod 8 split.
    static ExtensionConfig p2_default();
    const ExtensionRule* find(unsigned long p, int stem) const;
};

struct StemEntry {
    CyclicDecomp group;
    std::vector<std::string> provenance;
};

// Reads stems lo..hi off an E_infinity chart.  Needs the chart to cover stems
// lo - 2 .. hi + 2, to pass collapse_check and to have an empty horizon row.
std::map<int, StemEntry> assemble_stems(const Chart& c, const ExtensionConfig& ext, int lo, int hi);

// Aligned grid: rows s (top = horizon), columns t; cells show summand orders.
std::string render_grid(const Chart& c);

std::string order_to_string(const CyclicFactor& f, unsigned long p);

}  // namespace morava
