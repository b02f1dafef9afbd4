#include "mptri/decomp.hpp"

#include <algorithm>

namespace mptri {

namespace {

TriSet make_triset(const Poly& lower, const Poly& upper) {
    return TriSet{lower.canonical(), upper.canonical()};
}

// f = l1*v^t + l0 with t > 0 (l0 may vanish)
bool two_term_shape(const Poly& f, std::size_t var) {
    int d = f.degree(var);
    if (d < 1) return false;
    for (int k = 1; k < d; ++k)
        if (!f.coefficient(var, static_cast<std::uint32_t>(k)).is_zero()) return false;
    return true;
}

std::vector<SignedComponent> remove_negatives_core(const std::vector<SignedComponent>& pos,
                                                   const std::vector<SignedComponent>& neg,
                                                   const VarOrderPtr& order, std::size_t vx,
                                                   std::size_t vy) {
    WeightedZeroSet zs(order, vx, vy);
    for (const auto& c : pos) zs.add_triset(c.triset.lower, c.triset.upper, c.weight);
    for (const auto& c : neg) zs.add_triset(c.triset.lower, c.triset.upper, -c.weight);
    zs.require_positive();
    std::vector<SignedComponent> out;
    for (const auto& c : zs.clusters())
        out.push_back({TriSet{c.u, c.v}, c.mult});
    return out;
}

Decomposition bivariate_core(const Poly& f1_in, const Poly& f2_in, std::size_t vx,
                             std::size_t vy) {
    if (f1_in.is_zero() || f2_in.is_zero())
        throw MathError("decomposition of a system containing the zero polynomial");
    Poly g = gcd(f1_in, f2_in);
    if (!g.is_constant()) throw CommonFactor(g);

    Poly f1 = f1_in.canonical(), f2 = f2_in.canonical();
    if (f1.degree(vy) < f2.degree(vy)) std::swap(f1, f2);

    const VarOrderPtr order = f1.order();
    Decomposition out;

    if (f2.degree(vy) == 0) {
        if (f1.degree(vy) == 0) return out; // coprime pair free of y: no common zeros
        // f2 in K[x]: already the content-split case
        out.positives.push_back({make_triset(f2, primitive_part(f1, vy)), 1});
        return out;
    }

    ContentSplit split = split_contents(f1, f2, vy);
    PrsSequence seq = prs_extended(split.f1_prim, split.f2_prim, vy);

    std::vector<SignedComponent> comps;
    if (!seq.last_lower().is_constant())
        comps.push_back({make_triset(seq.last_lower(), seq.last_upper()), 1});
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (!s.p.is_constant())
            comps.push_back({make_triset(s.p, seq.f(i + 2)), 1});
    }
    // positive cross terms M(m_i, q_i), i < k: the only cross terms with a
    // possibly nonempty zero set once the moduli are univariate (the p and
    // m_{i-1}/w_i partners are coprime univariate pairs)
    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (s.m.is_constant()) continue;
        if (auto red = main_free_reduction(s.m, s.q, vy)) {
            // the pair reduces to (m_i, s_i); empty iff the univariate gcd is a unit
            if (red->is_zero() || !gcd(s.m, *red).is_constant())
                comps.push_back({make_triset(s.m, s.q), 1});
        } else {
            comps.push_back({make_triset(s.m, s.q), 1});
        }
    }
    if (split.from_f1) comps.push_back({*split.from_f1, 1});
    if (split.from_f2) comps.push_back({*split.from_f2, 1});

    std::vector<SignedComponent> negs;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (!s.w.is_constant())
            negs.push_back({make_triset(s.w, seq.f(i + 2)), 1});
    }
    if (!seq.steps.back().m.is_constant() && !two_term_shape(seq.last_upper(), vy))
        negs.push_back({make_triset(seq.steps.back().m, seq.last_upper()), 1});

    out.positives = negs.empty() ? comps : remove_negatives_core(comps, negs, order, vx, vy);
    out.trace = std::move(seq);
    return out;
}

// expand M(A, B) (both free of the main variable, two free variables) into
// weighted clusters, scaled by sign
void expand_pair_into(WeightedZeroSet& zs, const Poly& A, const Poly& B, long long sign,
                      std::size_t vx, std::size_t vy) {
    if (A.is_constant() || B.is_constant()) return; // no zeros (coprime with a unit)
    for (const auto& [u, e] : squarefree_decomposition(A)) {
        Decomposition sub = bivariate_core(u, B, vx, vy);
        for (const auto& comp : sub.positives)
            zs.add_triset(comp.triset.lower, comp.triset.upper,
                          sign * static_cast<long long>(e) * comp.weight);
    }
}

} // namespace

ContentSplit split_contents(const Poly& f1, const Poly& f2, std::size_t var) {
    if (f1.is_zero() || f2.is_zero()) throw MathError("content split of a zero polynomial");
    Poly g = gcd(f1, f2);
    if (!g.is_constant()) throw CommonFactor(g);
    ContentSplit out;
    Poly h1 = content(f1, var), h2 = content(f2, var);
    out.f1_prim = divide_exact(f1, h1).canonical();
    out.f2_prim = divide_exact(f2, h2).canonical();
    if (!h1.is_constant() && !out.f2_prim.is_constant())
        out.from_f1 = make_triset(h1, out.f2_prim);
    if (!h2.is_constant() && !out.f1_prim.is_constant())
        out.from_f2 = make_triset(h2, out.f1_prim);
    return out;
}

Decomposition bivariate_decompose(const Poly& f1, const Poly& f2) {
    if (!f1.order() || f1.order()->size() != 2)
        throw MathError("bivariate decomposition requires exactly two variables");
    return bivariate_core(f1, f2, 0, 1);
}

bool cor42_shortcircuit(const PrsSequence& seq) {
    if (seq.steps.empty()) return false;
    for (const auto& s : seq.steps)
        if (!s.w.is_constant()) return false;
    return two_term_shape(seq.last_upper(), seq.main_var);
}

std::vector<SignedComponent> remove_negatives(const std::vector<SignedComponent>& pos,
                                              const std::vector<SignedComponent>& neg) {
    if (pos.empty() && neg.empty()) return {};
    const VarOrderPtr order = (pos.empty() ? neg : pos).front().triset.lower.order();
    if (order->size() != 2) throw MathError("negative removal expects bivariate components");
    return remove_negatives_core(pos, neg, order, 0, 1);
}

std::vector<std::pair<Poly, Poly>> triangular_gcd(const Poly& u, const Poly& v,
                                                  const Poly& modulus) {
    if (modulus.is_zero()) throw MathError("zero modulus");
    if (modulus.is_constant()) throw MathError("constant modulus");
    const VarOrderPtr order = modulus.order();
    // the modulus must be univariate; find its variable
    std::size_t vx = order->size();
    for (std::size_t i = 0; i < order->size(); ++i) {
        if (modulus.degree(i) > 0) {
            if (vx != order->size()) throw MathError("modulus must be univariate");
            vx = i;
        }
    }
    std::size_t vy = order->main_index() == vx ? 0 : order->main_index();

    std::vector<std::pair<Poly, Poly>> out;
    QX m_full = qx_monic(qx_from_poly(modulus, vx));
    for (const auto& [sq, exp] : qx_squarefree(m_full)) {
        std::function<YQ(const QX&)> body = [&](const QX& mod) -> YQ {
            YQ a = yq_from_poly(u, vx, vy, mod);
            YQ b = yq_from_poly(v, vx, vy, mod);
            if (a.is_zero() && b.is_zero()) return a; // zero gcd sentinel
            if (a.is_zero()) return yq_monic(b, mod);
            if (b.is_zero()) return yq_monic(a, mod);
            return yq_gcd(a, b, mod);
        };
        std::vector<std::pair<QX, YQ>> branches;
        for_each_branch<YQ>(sq, body, branches);
        for (auto& [piece, gy] : branches) {
            QX lifted = piece;
            for (int i = 1; i < exp; ++i) lifted = qx_mul(lifted, piece);
            Poly lower = qx_to_poly(lifted, order, vx);
            Poly upper = gy.is_zero() ? Poly(order)
                                      : (gy.deg() == 0 ? Poly(order, 1)
                                                       : yq_to_poly(gy, order, vx, vy));
            out.emplace_back(std::move(lower), std::move(upper));
        }
    }
    return out;
}

std::optional<Poly> main_free_reduction(const Poly& lower, const Poly& upper, std::size_t var) {
    if (lower.is_zero() || upper.is_zero()) return std::nullopt;
    if (upper.degree(var) <= 0) return upper;
    Poly sq = lower;
    // squarefree part of the lower polynomial
    Poly d(lower.order());
    for (std::size_t v = 0; v < lower.nvars(); ++v) {
        Poly pa = lower.derivative(v);
        if (pa.is_zero()) continue;
        d = d.is_zero() ? pa : gcd(d, pa);
        if (d.is_one()) break;
    }
    if (!d.is_zero() && !d.is_constant()) sq = divide_exact(lower, gcd(lower, d));
    sq = sq.canonical();
    int dv = upper.degree(var);
    for (int k = 1; k <= dv; ++k) {
        Poly c = upper.coefficient(var, static_cast<std::uint32_t>(k));
        if (c.is_zero()) continue;
        if (!divides(sq, c)) return std::nullopt;
    }
    return upper.coefficient(var, 0);
}

WeightedZeroSet zero_set_of_components(const std::vector<SignedComponent>& comps,
                                       const VarOrderPtr& order, std::size_t var_x,
                                       std::size_t var_y) {
    WeightedZeroSet zs(order, var_x, var_y);
    for (const auto& c : comps) zs.add_triset(c.triset.lower, c.triset.upper, c.weight);
    return zs;
}

Decomposition signed_decompose(const Poly& f1_in, const Poly& f2_in, std::size_t var) {
    if (f1_in.is_zero() || f2_in.is_zero())
        throw MathError("decomposition of a system containing the zero polynomial");
    const VarOrderPtr order = f1_in.order();
    if (!order || order->size() < 2)
        throw MathError("signed decomposition requires at least two variables");
    if (var != order->main_index())
        throw MathError("the main variable must be the last in the order");
    Poly g = gcd(f1_in, f2_in);
    if (!g.is_constant()) throw CommonFactor(g);

    const std::size_t free_vars = order->size() - 1;
    Poly f1 = f1_in.canonical(), f2 = f2_in.canonical();
    if (f1.degree(var) < f2.degree(var)) std::swap(f1, f2);

    Decomposition out;
    if (f2.degree(var) == 0) {
        if (f1.degree(var) == 0) return out;
        out.positives.push_back({make_triset(f2, primitive_part(f1, var)), 1});
        return out;
    }

    ContentSplit split = split_contents(f1, f2, var);
    PrsSequence seq = prs_extended(split.f1_prim, split.f2_prim, var);

    if (!seq.last_lower().is_constant())
        out.positives.push_back({make_triset(seq.last_lower(), seq.last_upper()), 1});
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (!s.p.is_constant())
            out.positives.push_back({make_triset(s.p, seq.f(i + 2)), 1});
    }
    if (split.from_f1) out.positives.push_back({*split.from_f1, 1});
    if (split.from_f2) out.positives.push_back({*split.from_f2, 1});

    // cluster accumulator for everything expandable to two free variables
    WeightedZeroSet zs(order, 0, 1);

    // a negative term (lower, upper-with-main); reduce when possible
    auto handle_mixed_negative = [&](const Poly& lower, const Poly& upper) {
        auto red = main_free_reduction(lower, upper, var);
        if (red && !red->is_zero()) {
            if (free_vars == 1) {
                // univariate coprime pair: empty zero set
                return;
            }
            if (free_vars == 2) {
                expand_pair_into(zs, lower, *red, -1, 0, 1);
                return;
            }
            out.pending.push_back({lower.canonical(), red->canonical(), -1, true});
            return;
        }
        out.negatives.push_back({make_triset(lower, upper), 1});
    };

    // a main-variable-free cross term with the given sign
    auto handle_free_pair = [&](const Poly& A, const Poly& B, int sign) {
        if (A.is_constant() || B.is_constant()) return;
        if (free_vars == 1) return; // coprime univariate pair: empty (Lemma for n = 2)
        if (free_vars == 2) {
            expand_pair_into(zs, A, B, sign, 0, 1);
            return;
        }
        out.pending.push_back({A.canonical(), B.canonical(), sign, true});
    };

    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (!s.w.is_constant()) handle_mixed_negative(s.w, seq.f(i + 2));
    }
    const PrsStep& last = seq.steps.back();
    if (!last.m.is_constant() &&
        !(free_vars == 1 && two_term_shape(seq.last_upper(), var)))
        handle_mixed_negative(last.m, seq.last_upper());

    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
        const PrsStep& s = seq.steps[i];
        if (s.m.is_constant()) continue;
        Poly align = divide_exact(s.g, s.p); // m_{i-1}/w_i
        handle_free_pair(s.m, align, -1);
        handle_free_pair(s.m, s.p, -1);
        // q_i carries the main variable; reduce it first
        auto red = main_free_reduction(s.m, s.q, var);
        if (red && !red->is_zero()) {
            handle_free_pair(s.m, *red, +1);
        } else if (s.q.degree(var) > 0) {
            out.pending.push_back({s.m.canonical(), s.q.canonical(), +1, false});
        } else {
            handle_free_pair(s.m, s.q, +1);
        }
    }

    for (const auto& c : zs.clusters()) {
        if (c.mult > 0)
            out.positives.push_back({TriSet{c.u, c.v}, c.mult});
        else
            out.negatives.push_back({TriSet{c.u, c.v}, -c.mult});
    }
    out.trace = std::move(seq);
    return out;
}

MultZeroReport report_multiplicities(const Decomposition& d) {
    if (!d.negatives.empty() || !d.pending.empty())
        throw MathError("multiplicity report requires an all-positive decomposition");
    MultZeroReport rep;
    if (d.positives.empty()) return rep;
    const VarOrderPtr order = d.positives.front().triset.lower.order();
    if (order->size() != 2)
        throw MathError("multiplicity report requires a bivariate decomposition");
    for (const auto& c : d.positives) {
        if (c.weight <= 0) throw MathError("multiplicity report requires positive weights");
    }
    WeightedZeroSet zs = zero_set_of_components(d.positives, order, 0, 1);
    for (const auto& c : zs.clusters()) {
        MultZeroEntry e;
        e.lower = c.u;
        e.upper = c.v;
        e.points = c.points;
        e.multiplicity = c.mult;
        if (c.u.degree(0) == 1 && c.v.degree(1) == 1) {
            // u = a*x + b, v = c(x)*y + d(x): one rational point
            QX u = qx_from_poly(c.u, 0);
            mpq_class x0 = -u.c[0] / u.c[1];
            QX vc = qx_from_poly(c.v.coefficient(1, 1), 0);
            QX vd = qx_from_poly(c.v.coefficient(1, 0), 0);
            mpq_class denom = vc.eval(x0);
            if (denom != 0) {
                mpq_class y0 = -vd.eval(x0) / denom;
                x0.canonicalize();
                y0.canonicalize();
                e.rational_point = std::make_pair(x0, y0);
            }
        }
        rep.total += e.multiplicity * e.points;
        rep.points.push_back(std::move(e));
    }
    return rep;
}

std::optional<std::pair<mpq_class, mpq_class>> MultZeroReport::find_rational(
    long num_x, long den_x, long num_y, long den_y) const {
    mpq_class x(num_x, den_x), y(num_y, den_y);
    x.canonicalize();
    y.canonicalize();
    for (const auto& e : points) {
        if (e.rational_point && e.rational_point->first == x && e.rational_point->second == y)
            return e.rational_point;
    }
    return std::nullopt;
}

long long MultZeroReport::multiplicity_at(const mpq_class& x, const mpq_class& y) const {
    long long m = 0;
    for (const auto& e : points) {
        if (e.rational_point && e.rational_point->first == x && e.rational_point->second == y)
            m += e.multiplicity;
    }
    return m;
}

} // namespace mptri
