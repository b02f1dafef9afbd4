#ifndef MPTRI_DECOMP_HPP
#define MPTRI_DECOMP_HPP

#include <optional>
#include <vector>

#include "mptri/prs.hpp"
#include "mptri/zeroset.hpp"

namespace mptri {

// Triangular pair: lower is free of the main variable, both canonical.
struct TriSet {
    Poly lower;
    Poly upper;
    bool operator==(const TriSet& o) const { return lower == o.lower && upper == o.upper; }
};

struct SignedComponent {
    TriSet triset;
    long long weight = 1; // nonzero; negative only in the n-variable path
};

// Main-variable-free sub-system left for recursive decomposition.
// sign: +1/-1 contribution; reduced: whether the pair was reduced exactly to
// its main-variable-free part (false = emitted verbatim, second may still
// contain the main variable).
struct PendingSystem {
    Poly first;
    Poly second;
    int sign = 1;
    bool reduced = true;
};

struct Decomposition {
    std::vector<SignedComponent> positives;
    std::vector<SignedComponent> negatives;
    std::vector<PendingSystem> pending;
    std::optional<PrsSequence> trace;
};

struct ContentSplit {
    std::optional<TriSet> from_f1; // (Cont(f1), Prim(f2)) when nontrivial
    std::optional<TriSet> from_f2; // (Cont(f2), Prim(f1)) when nontrivial
    Poly f1_prim;
    Poly f2_prim;
};

// Theorem-4.4-style content split; error if the inputs share a factor.
ContentSplit split_contents(const Poly& f1, const Poly& f2, std::size_t var);

// Complete positive-multiplicity pipeline for zero-dimensional bivariate
// systems (content split, tracked PRS, negative-set removal).  Output has
// empty negative and pending lists.
Decomposition bivariate_decompose(const Poly& f1, const Poly& f2);

// Signed decomposition for n >= 2 variables: positives, negatives (may remain
// after cancellation), and pending main-variable-free sub-systems.  Pending
// pairs over exactly two variables are expanded one recursion level deep.
Decomposition signed_decompose(const Poly& f1, const Poly& f2, std::size_t var);

// True iff all w_i are units and f_{k+1} has the two-term shape
// l1(x)*y^t + l0(x) with t > 0, in which case the negative set is empty.
bool cor42_shortcircuit(const PrsSequence& seq);

// Deletes the weighted zeros of `neg` from `pos` exactly; all inputs are
// bivariate triangular pairs.  Throws MathError if a negative zero has no
// positive counterpart.
std::vector<SignedComponent> remove_negatives(const std::vector<SignedComponent>& pos,
                                              const std::vector<SignedComponent>& neg);

// Splits `modulus` into pairwise-coprime factors, each paired with the monic
// gcd of u and v over the quotient ring by that factor.
std::vector<std::pair<Poly, Poly>> triangular_gcd(const Poly& u, const Poly& v,
                                                  const Poly& modulus);

struct MultZeroEntry {
    Poly lower;              // squarefree
    Poly upper;              // squarefree above every root of lower
    int points = 0;          // number of distinct zeros covered
    long long multiplicity = 0;
    // exact coordinates when the entry is a single rational point
    std::optional<std::pair<mpq_class, mpq_class>> rational_point;
};

struct MultZeroReport {
    std::vector<MultZeroEntry> points;
    long long total = 0;
    std::optional<std::pair<mpq_class, mpq_class>> find_rational(long num_x, long den_x,
                                                                 long num_y, long den_y) const;
    long long multiplicity_at(const mpq_class& x, const mpq_class& y) const;
};

// Per-root multiplicity table of an all-positive bivariate decomposition.
MultZeroReport report_multiplicities(const Decomposition& d);

// If every positive-degree coefficient of upper w.r.t. var vanishes on the
// zero set of lower (squarefree part divides it), returns the
// main-variable-free part of upper; otherwise nullopt.
std::optional<Poly> main_free_reduction(const Poly& lower, const Poly& upper, std::size_t var);

// weighted zero set of a list of bivariate components (exact)
WeightedZeroSet zero_set_of_components(const std::vector<SignedComponent>& comps,
                                       const VarOrderPtr& order, std::size_t var_x,
                                       std::size_t var_y);

} // namespace mptri

#endif
