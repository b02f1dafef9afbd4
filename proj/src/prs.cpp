#include "mptri/prs.hpp"

#include <utility>

namespace mptri {

Poly PrsSequence::m_of(std::size_t i) const {
    if (i == 0) return Poly(chain.front().order(), 1);
    return steps.at(i - 1).m;
}

void PrsSequence::verify() const {
    const std::size_t v = main_var;
    Poly m_prev(chain.front().order(), 1);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const PrsStep& s = steps[i];
        const Poly& fi = chain.at(i);
        const Poly& fi1 = chain.at(i + 1);
        if (s.m * fi + s.q * fi1 != s.g * s.f_next)
            throw MathError("PRS step identity failed at step " + std::to_string(s.index));
        if (s.f_next != chain.at(i + 2))
            throw MathError("PRS chain out of sync");
        if (s.m.degree(v) > 0 || s.p.degree(v) > 0 || s.w.degree(v) > 0 || s.g.degree(v) > 0)
            throw MathError("PRS cofactor depends on the main variable");
        if (s.w * divide_exact(s.g, s.p) != m_prev)
            throw MathError("w_i is not the recorded factor of m_{i-1}");
        if (!gcd(s.m, s.p).is_constant())
            throw MathError("gcd(m_i, p_i) != 1");
        if (!gcd(s.m, s.g).is_constant())
            throw MathError("gcd(m_i, g_i) != 1");
        bool last = (i + 1 == steps.size());
        if (!last && !is_primitive(s.f_next, v))
            throw MathError("intermediate remainder is not primitive");
        if (chain.at(i + 2).degree(v) >= chain.at(i + 1).degree(v))
            throw MathError("PRS degrees do not strictly decrease");
        m_prev = s.m;
    }
    if (last_lower().degree(v) > 0)
        throw MathError("sequence did not terminate in a main-variable-free element");
}

nlohmann::json PrsSequence::trace_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : steps) {
        out.push_back({{"index", s.index},
                       {"m", s.m.to_string()},
                       {"q", s.q.to_string()},
                       {"p", s.p.to_string()},
                       {"w", s.w.to_string()},
                       {"g", s.g.to_string()},
                       {"f_next", s.f_next.to_string()},
                       {"aligned", s.aligned}});
    }
    return out;
}

PrsSequence prs_extended(const Poly& f1, const Poly& f2, std::size_t var) {
    if (f1.is_zero() || f2.is_zero()) throw MathError("PRS of a zero polynomial");
    if (f1.degree(var) < f2.degree(var))
        throw MathError("PRS requires deg(f1) >= deg(f2) in the main variable");
    if (f2.degree(var) < 1) throw MathError("PRS requires deg(f2) >= 1 in the main variable");
    if (!is_primitive(f1, var) || !is_primitive(f2, var))
        throw MathError("PRS inputs must be primitive in the main variable");

    const VarOrderPtr order = f1.order();
    PrsSequence seq;
    seq.main_var = var;
    seq.chain = {f1, f2};

    Poly m_prev(order, 1);
    int index = 1;
    while (seq.chain.back().degree(var) >= 1) {
        const Poly& fi = seq.chain[seq.chain.size() - 2];
        const Poly& fi1 = seq.chain.back();
        PseudoDivResult pd = pseudo_divide_extended(fi, fi1, var);
        if (pd.remainder.is_zero()) throw CommonFactor(fi1.canonical());

        Poly M = pd.multiplier;
        Poly Q = pd.quotient;
        Poly R = pd.remainder;

        // divide out t = gcd(l^(delta+1), Cont(q))
        Poly t = gcd(M, content(Q, var));
        if (!t.is_one()) {
            M = divide_exact(M, t);
            Q = divide_exact(Q, t);
            R = divide_exact(R, t);
        }

        PrsStep step;
        step.index = index++;
        if (R.degree(var) >= 1) {
            Poly c = content(R, var);
            Poly F = divide_exact(R, c);
            // make m coprime to the full removable content
            Poly v2 = gcd(M, c);
            if (!v2.is_one()) {
                M = divide_exact(M, v2);
                Q = divide_exact(Q, v2);
                c = divide_exact(c, v2);
            }
            Poly align = gcd(m_prev, c);
            step.aligned = (align == m_prev.sign_normalized());
            step.m = M;
            step.q = Q;
            step.w = divide_exact(m_prev, align);
            step.p = divide_exact(c, align);
            step.g = c;
            step.f_next = F;
            seq.steps.push_back(step);
            seq.chain.push_back(step.f_next);
            m_prev = M;
        } else {
            // final step: the remainder is free of the main variable
            Poly v2 = gcd(M, R);
            if (!v2.is_one()) {
                M = divide_exact(M, v2);
                Q = divide_exact(Q, v2);
                R = divide_exact(R, v2);
            }
            Poly align = gcd(m_prev, R);
            step.aligned = (align == m_prev.sign_normalized());
            step.m = M;
            step.q = Q;
            step.w = divide_exact(m_prev, align);
            step.p = Poly(order, 1);
            step.g = align;
            step.f_next = divide_exact(R, align);
            seq.steps.push_back(step);
            seq.chain.push_back(step.f_next);
            break;
        }
    }
    return seq;
}

PrsSequence normalize_cor8(const PrsSequence& in) {
    PrsSequence seq = in;
    const VarOrderPtr order = seq.chain.front().order();
    Poly m_prev(order, 1);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        PrsStep& s = seq.steps[i];
        Poly h = gcd(s.m, s.g);
        if (!h.is_constant()) {
            s.m = divide_exact(s.m, h);
            s.q = divide_exact(s.q, h);
            s.g = divide_exact(s.g, h);
        }
        if (i + 1 < seq.steps.size()) {
            // refresh the w/p split against the (possibly reduced) previous m
            Poly q_tilde = gcd(m_prev, s.g);
            s.w = divide_exact(m_prev, q_tilde);
            s.p = divide_exact(s.g, q_tilde);
        } else {
            // fold g_k into f_{k+2}, then delete gcd(m_k, f_{k+2})
            if (!s.g.is_one()) {
                s.f_next = s.g * s.f_next;
                s.g = Poly(order, 1);
            }
            s.w = m_prev;
            s.p = Poly(order, 1);
            Poly d = gcd(s.m, s.f_next);
            if (!d.is_constant()) {
                s.m = divide_exact(s.m, d);
                s.q = divide_exact(s.q, d);
                s.f_next = divide_exact(s.f_next, d);
            }
            seq.chain.back() = s.f_next;
        }
        m_prev = s.m;
    }
    return seq;
}

SubresultantSeq subresultant_sequence(const Poly& f1, const Poly& f2, std::size_t var) {
    if (f1.degree(var) < 1 || f2.degree(var) < 1)
        throw MathError("subresultant sequence requires positive degrees");
    Poly A = f1, B = f2;
    if (A.degree(var) < B.degree(var)) std::swap(A, B);

    SubresultantSeq out;
    out.main_var = var;
    out.elements = {A, B};

    const VarOrderPtr order = A.order();
    Poly g(order, 1), h(order, 1);
    while (B.degree(var) >= 0 && !B.is_zero()) {
        int delta = A.degree(var) - B.degree(var);
        Poly R = pseudo_remainder(A, B, var);
        if (R.is_zero()) break;
        A = B;
        B = divide_exact(R, g * h.pow(static_cast<unsigned>(delta)));
        out.elements.push_back(B);
        g = A.leading_coefficient(var);
        if (delta > 0) {
            Poly gd = g.pow(static_cast<unsigned>(delta));
            h = (delta == 1) ? gd : divide_exact(gd, h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (B.degree(var) == 0) break;
    }
    for (const auto& e : out.elements)
        out.leading_coeffs.push_back(e.leading_coefficient(var));
    return out;
}

bool primitivity_certificate(const Poly& g, const Poly& l, const Poly& s) {
    (void)g;
    if (l.is_zero() && s.is_zero()) return false;
    if (l.is_zero()) return s.is_constant();
    if (s.is_zero()) return l.is_constant();
    return gcd(l, s).is_constant();
}

} // namespace mptri
