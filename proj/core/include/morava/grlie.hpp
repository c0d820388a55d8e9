#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morava/stabilizer.hpp"

namespace morava {

// Level shift of the p-th power operator on numerators: phi(k) = min(k + n, p k).
unsigned phi_level(unsigned k, unsigned n, unsigned long p);

// [a@k, b@l] = a b^{p^k} - b a^{p^l} at level k + l.
GrElem gr_bracket(const ResidueField& F, const GrElem& a, const GrElem& b);
// P(a@k), three cases split at k/n = 1/(p-1).
GrElem gr_power(const ResidueField& F, const GrElem& a);

struct GroupCheckReport {
    unsigned long p = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned l = 0;  // unused for power checks
    unsigned trials = 0;
    unsigned mismatches = 0;
    unsigned degenerate = 0;  // graded side vanished; only the level was checked
    std::vector<std::string> failures;

    bool ok() const { return mismatches == 0; }
};

GroupCheckReport check_bracket_vs_group(const WittRingPtr& ring, unsigned k, unsigned l, unsigned trials,
                                        std::uint64_t seed = 1);
GroupCheckReport check_power_vs_group(const WittRingPtr& ring, unsigned k, unsigned trials,
                                      std::uint64_t seed = 1);

// F_p-subspace of gr_{k/n} = F_q, kept in reduced row echelon form on the
// coordinate vectors of the power basis.
class GrSubspace {
public:
    GrSubspace(unsigned long p, unsigned n, unsigned level = 0);

    static GrSubspace full(const ResidueField& F, unsigned level = 0);
    static GrSubspace trace_kernel(const ResidueField& F, unsigned level = 0);

    unsigned long p() const { return p_; }
    unsigned degree() const { return n_; }
    unsigned level() const { return level_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<FqElem>& basis() const { return rows_; }
    const std::vector<unsigned>& pivots() const { return pivots_; }

    // Reduction of v against the basis (pivot coordinates cleared).
    FqElem reduce(const FqElem& v) const;
    bool contains(const FqElem& v) const;
    // Returns true if the dimension grew.
    bool insert(const FqElem& v);
    void add(const GrSubspace& other);
    bool is_subspace_of(const GrSubspace& other) const;

    friend bool operator==(const GrSubspace& a, const GrSubspace& b)
    {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    unsigned long p_;
    unsigned n_;
    unsigned level_;
    std::vector<FqElem> rows_;
    std::vector<unsigned> pivots_;
};

// F_p-span of all brackets [a@k, b@l], a, b in F_q.  Requires q <= 2^16.
GrSubspace commutator_span(const ResidueField& F, unsigned k, unsigned l);
GrSubspace commutator_span(unsigned long p, unsigned n, unsigned k, unsigned l);

struct LevelData {
    unsigned level = 0;
    GrSubspace D;                  // bracket span at this level
    std::vector<unsigned> coords;  // non-pivot coordinates spanning Q = F_q / D
    std::size_t dim_quotient() const { return coords.size(); }
    // Induced P: Q_level -> Q_target (F_p matrix, rows = dim Q_target); target 0 if beyond L.
    unsigned p_target = 0;
    std::vector<std::vector<unsigned>> p_matrix;
};

struct ChainSummand {
    unsigned start = 0;  // first level of the interval
    unsigned end = 0;    // last level of the interval
    unsigned length = 0;
    bool free = false;   // interval reaches the last computed level
};

struct AbelianizationReport {
    unsigned long p = 0;
    unsigned n = 0;
    unsigned max_level = 0;
    std::vector<LevelData> levels;  // index k - 1
    std::vector<ChainSummand> summands;
    CyclicDecomp assembled;
    CyclicDecomp mod_p;
};

// Graded abelianization up to level L/n.  The graded image of the closed
// commutator subgroup is taken to be the bracket span sum D_k.
AbelianizationReport abelianization_report(unsigned long p, unsigned n, unsigned L);
AbelianizationReport abelianization_report(const ResidueField& F, unsigned L);

}  // namespace morava
