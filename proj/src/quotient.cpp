#include "mptri/quotient.hpp"

namespace mptri {

YQ yq_reduce(const YQ& a, const QX& m) {
    YQ out;
    out.c.reserve(a.c.size());
    for (const auto& ci : a.c) out.c.push_back(qx_mod(ci, m));
    out.trim();
    return out;
}

YQ yq_from_poly(const Poly& p, std::size_t var_x, std::size_t var_y, const QX& m) {
    YQ out;
    if (p.is_zero()) return out;
    int dy = p.degree(var_y);
    out.c.resize(static_cast<std::size_t>(dy) + 1);
    for (int k = 0; k <= dy; ++k)
        out.c[static_cast<std::size_t>(k)] =
            qx_mod(qx_from_poly(p.coefficient(var_y, static_cast<std::uint32_t>(k)), var_x), m);
    out.trim();
    return out;
}

Poly yq_to_poly(const YQ& a, const VarOrderPtr& order, std::size_t var_x, std::size_t var_y) {
    Poly out(order);
    mpz_class den = 1;
    for (const auto& ci : a.c)
        for (const auto& q : ci.c)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<std::pair<Exponents, mpz_class>> terms;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < a.c[i].c.size(); ++j) {
            if (a.c[i].c[j] == 0) continue;
            Exponents e(order->size(), 0);
            e[var_y] = static_cast<std::uint32_t>(i);
            e[var_x] = static_cast<std::uint32_t>(j);
            mpq_class scaled = a.c[i].c[j] * den;
            terms.emplace_back(std::move(e), scaled.get_num());
        }
    }
    return Poly::from_terms(order, std::move(terms)).canonical();
}

YQ yq_add(const YQ& a, const YQ& b, const QX& m) {
    YQ out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        QX s;
        if (i < a.c.size()) s = qx_add(s, a.c[i]);
        if (i < b.c.size()) s = qx_add(s, b.c[i]);
        out.c[i] = qx_mod(s, m);
    }
    out.trim();
    return out;
}

YQ yq_sub(const YQ& a, const YQ& b, const QX& m) {
    YQ nb = b;
    for (auto& ci : nb.c) ci = qx_neg(ci);
    return yq_add(a, nb, m);
}

YQ yq_mul(const YQ& a, const YQ& b, const QX& m) {
    YQ out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, QX());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = qx_add(out.c[i + j], qx_mul(a.c[i], b.c[j]));
    for (auto& ci : out.c) ci = qx_mod(ci, m);
    out.trim();
    return out;
}

YQ yq_scale(const YQ& a, const QX& s, const QX& m) {
    YQ out;
    out.c.reserve(a.c.size());
    for (const auto& ci : a.c) out.c.push_back(qx_mod(qx_mul(ci, s), m));
    out.trim();
    return out;
}

YQ yq_derivative(const YQ& a, const QX& m) {
    YQ out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c[i - 1] = qx_mod(qx_scale(a.c[i], mpq_class(static_cast<long>(i))), m);
    out.trim();
    return out;
}

bool yq_eq(const YQ& a, const YQ& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!qx_eq(a.c[i], b.c[i])) return false;
    return true;
}

QX qx_inverse_mod(const QX& a, const QX& m) {
    QX r = qx_mod(a, m);
    if (r.is_zero()) throw MathError("inverse of zero in quotient ring");
    auto e = qx_ext_gcd(r, m);
    if (e.g.is_constant()) return qx_mod(qx_scale(e.u, mpq_class(1) / e.g.c[0]), m);
    if (e.g.deg() == m.deg()) throw MathError("inverse of zero in quotient ring");
    throw SplitRequest{e.g};
}

YQ yq_mod(const YQ& a, const YQ& b, const QX& m) {
    if (b.is_zero()) throw MathError("quotient-ring division by zero");
    QX inv = qx_inverse_mod(b.c.back(), m);
    YQ r = yq_reduce(a, m);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        QX f = qx_mod(qx_mul(r.c.back(), inv), m);
        std::size_t shift = r.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = qx_mod(qx_sub(r.c[shift + i], qx_mul(f, b.c[i])), m);
        r.trim();
    }
    return r;
}

YQ yq_divide_exact(const YQ& a, const YQ& b, const QX& m) {
    if (b.is_zero()) throw MathError("quotient-ring division by zero");
    QX inv = qx_inverse_mod(b.c.back(), m);
    YQ r = yq_reduce(a, m);
    YQ q;
    if (r.deg() >= b.deg()) q.c.assign(r.c.size() - b.c.size() + 1, QX());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        QX f = qx_mod(qx_mul(r.c.back(), inv), m);
        std::size_t shift = r.c.size() - b.c.size();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = qx_mod(qx_sub(r.c[shift + i], qx_mul(f, b.c[i])), m);
        r.trim();
    }
    if (!r.is_zero()) throw NonExactDivision("non-exact quotient-ring division");
    q.trim();
    return q;
}

YQ yq_monic(const YQ& a, const QX& m) {
    YQ r = yq_reduce(a, m);
    if (r.is_zero()) return r;
    QX inv = qx_inverse_mod(r.c.back(), m);
    return yq_scale(r, inv, m);
}

YQ yq_gcd(const YQ& a, const YQ& b, const QX& m) {
    YQ u = yq_reduce(a, m), v = yq_reduce(b, m);
    if (u.deg() < v.deg()) std::swap(u, v);
    while (!v.is_zero()) {
        YQ r = yq_mod(u, v, m);
        u = v;
        v = r;
    }
    return yq_monic(u, m);
}

std::vector<std::pair<QX, std::vector<YSquarefreePart>>> yq_squarefree_split(const YQ& a,
                                                                             const QX& m) {
    std::vector<std::pair<QX, std::vector<YSquarefreePart>>> out;
    std::function<std::vector<YSquarefreePart>(const QX&)> body =
        [&](const QX& mod) -> std::vector<YSquarefreePart> {
        std::vector<YSquarefreePart> parts;
        YQ f = yq_reduce(a, mod);
        if (f.is_zero()) throw MathError("polynomial vanishes identically on the modulus");
        if (f.deg() == 0) return parts; // unit in y: no zeros above this piece
        f = yq_monic(f, mod);
        YQ fp = yq_derivative(f, mod);
        YQ g = yq_gcd(f, fp, mod);
        YQ w = yq_divide_exact(f, g, mod);
        int e = 1;
        // Musser's loop over the quotient ring
        while (w.deg() > 0) {
            YQ y = yq_gcd(w, g, mod);
            YQ layer = yq_divide_exact(w, y, mod);
            if (layer.deg() > 0) parts.push_back({layer, e});
            w = y;
            g = yq_divide_exact(g, y, mod);
            ++e;
        }
        if (g.deg() > 0) throw MathError("quotient-ring squarefree decomposition failed");
        return parts;
    };
    for_each_branch<std::vector<YSquarefreePart>>(m, body, out);
    return out;
}

} // namespace mptri
