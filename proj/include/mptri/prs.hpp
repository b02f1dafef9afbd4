#ifndef MPTRI_PRS_HPP
#define MPTRI_PRS_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "mptri/poly.hpp"

namespace mptri {

// One tracked remainder step.  The exact identity per step is
//
//     m * f_i + q * f_{i+1} = g * f_{i+2},   g = (m_{i-1} / w) * p,
//
// with m, p, w, g free of the main variable, gcd(m, p) = 1, gcd(m, g) = 1,
// and w an exact factor of the previous step's m.
struct PrsStep {
    int index = 0;     // i, 1-based
    Poly m;            // m_i, divides lc(f_{i+1})^(delta+1)
    Poly q;            // q_i
    Poly p;            // p_i (1 on the final step)
    Poly w;            // w_i, factor of m_{i-1}
    Poly g;            // g_i = (m_{i-1}/w_i) * p_i
    Poly f_next;       // f_{i+2}, primitive in the main variable except possibly last
    bool aligned = true; // whether m_{i-1} divided the remainder content directly
};

struct PrsSequence {
    std::size_t main_var = 0;
    std::vector<Poly> chain;     // f_1 .. f_{k+2}
    std::vector<PrsStep> steps;  // k steps

    std::size_t k() const { return steps.size(); }
    const Poly& f(std::size_t i) const { return chain.at(i - 1); } // 1-based
    const Poly& last_upper() const { return chain.at(chain.size() - 2); } // f_{k+1}
    const Poly& last_lower() const { return chain.back(); }               // f_{k+2}
    Poly m_of(std::size_t i) const; // m_i with m_0 = 1

    // re-expands every step identity and the gcd/primitivity invariants
    void verify() const;

    nlohmann::json trace_json() const;
};

// Tracked primitive remainder sequence for primitive f1, f2 with
// deg(f1,var) >= deg(f2,var) >= 1.  A zero remainder means the inputs share
// a factor; the error carries it.
struct CommonFactor : Error {
    Poly common;
    explicit CommonFactor(Poly g)
        : Error("inputs share the common factor " + g.to_string()), common(std::move(g)) {}
};

PrsSequence prs_extended(const Poly& f1, const Poly& f2, std::size_t var);

// Rewrites the sequence into the normalized form with gcd(m_i, g_i) = 1 for
// every step, g_k = 1 (folded into f_{k+2}) and gcd(m_k, f_{k+2}) = 1.
// Idempotent.
PrsSequence normalize_cor8(const PrsSequence& seq);

struct SubresultantSeq {
    std::size_t main_var = 0;
    std::vector<Poly> elements;        // F_1 .. F_{k+2}
    std::vector<Poly> leading_coeffs;  // lc of each element in the main variable
};

// Standard subresultant PRS with defective-case handling; degrees strictly
// decrease along the sequence.
SubresultantSeq subresultant_sequence(const Poly& f1, const Poly& f2, std::size_t var);

// Sufficient primitivity test: gcd(l, s) constant certifies Cont(g, main) = 1,
// where l is the divisor's leading coefficient and s the main-variable-free
// part of the pseudo-division quotient.
bool primitivity_certificate(const Poly& g, const Poly& l, const Poly& s);

} // namespace mptri

#endif
