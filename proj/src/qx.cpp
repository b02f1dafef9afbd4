#include "mptri/qx.hpp"

#include <algorithm>

namespace mptri {

QX QX::constant(const mpq_class& v) {
    QX out;
    if (v != 0) out.c = {v};
    return out;
}

QX QX::x() {
    QX out;
    out.c = {mpq_class(0), mpq_class(1)};
    return out;
}

void QX::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const mpq_class& QX::lc() const {
    if (c.empty()) throw MathError("leading coefficient of zero");
    return c.back();
}

mpq_class QX::eval(const mpq_class& a) const {
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return acc;
}

QX qx_add(const QX& a, const QX& b) {
    QX out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
}

QX qx_sub(const QX& a, const QX& b) { return qx_add(a, qx_neg(b)); }

QX qx_neg(const QX& a) {
    QX out = a;
    for (auto& x : out.c) x = -x;
    return out;
}

QX qx_mul(const QX& a, const QX& b) {
    QX out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

QX qx_scale(const QX& a, const mpq_class& s) {
    if (s == 0) return QX();
    QX out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

bool qx_eq(const QX& a, const QX& b) { return a.c == b.c; }

std::pair<QX, QX> qx_divrem(const QX& a, const QX& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    QX r = a, q;
    if (a.deg() >= b.deg()) q.c.assign(a.c.size() - b.c.size() + 1, 0);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        mpq_class f = r.lc() / b.lc();
        std::size_t shift = r.c.size() - b.c.size();
        q.c[shift] += f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QX qx_mod(const QX& a, const QX& m) { return qx_divrem(a, m).second; }

QX qx_div(const QX& a, const QX& b) {
    auto [q, r] = qx_divrem(a, b);
    if (!r.is_zero()) throw NonExactDivision("non-exact univariate division");
    return q;
}

QX qx_monic(const QX& a) {
    if (a.is_zero()) return a;
    return qx_scale(a, mpq_class(1) / a.lc());
}

QX qx_derivative(const QX& a) {
    QX out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) out.c[i - 1] = a.c[i] * static_cast<long>(i);
    out.trim();
    return out;
}

namespace {

std::vector<mpz_class> qx_to_zx(const QX& a) {
    mpz_class den = 1;
    for (const auto& q : a.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = mpq_class(a.c[i] * den).get_num();
    return out;
}

std::vector<mpz_class> zx_gcd_dense(std::vector<mpz_class> a, std::vector<mpz_class> b);

} // namespace

QX qx_gcd(const QX& a, const QX& b) {
    if (a.is_zero()) return qx_monic(b);
    if (b.is_zero()) return qx_monic(a);
    if (a.is_constant() || b.is_constant()) return QX::constant(1);
    auto g = zx_gcd_dense(qx_to_zx(a), qx_to_zx(b));
    QX out;
    out.c.reserve(g.size());
    for (const auto& c : g) out.c.emplace_back(c);
    out.trim();
    return qx_monic(out);
}

QxExtGcd qx_ext_gcd(const QX& a, const QX& b) {
    QX r0 = a, r1 = b;
    QX s0 = QX::constant(1), s1;
    QX t0, t1 = QX::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = qx_divrem(r0, r1);
        QX s2 = qx_sub(s0, qx_mul(q, s1));
        QX t2 = qx_sub(t0, qx_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) throw MathError("ext_gcd(0, 0)");
    mpq_class inv = mpq_class(1) / r0.lc();
    return {qx_scale(r0, inv), qx_scale(s0, inv), qx_scale(t0, inv)};
}

std::vector<std::pair<QX, int>> qx_squarefree(const QX& a) {
    std::vector<std::pair<QX, int>> out;
    if (a.is_zero()) throw MathError("squarefree decomposition of zero");
    if (a.is_constant()) return out;
    QX f = qx_monic(a);
    QX fp = qx_derivative(f);
    QX g = qx_gcd(f, fp);
    QX w = qx_div(f, g);
    QX y = qx_div(fp, g);
    int i = 1;
    // Yun's loop
    while (!w.is_constant()) {
        QX z = qx_sub(y, qx_derivative(w));
        QX p = qx_gcd(w, z);
        if (!p.is_constant()) out.emplace_back(p, i);
        w = qx_div(w, p);
        y = qx_div(z, p);
        ++i;
    }
    return out;
}

QX qx_from_poly(const Poly& p, std::size_t var) {
    QX out;
    if (p.is_zero()) return out;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (v != var && p.degree(v) > 0)
            throw MathError("polynomial is not univariate in the requested variable");
    }
    out.c.assign(static_cast<std::size_t>(p.degree(var)) + 1, 0);
    for (const auto& [e, coeff] : p.terms()) out.c[e[var]] = mpq_class(coeff);
    out.trim();
    return out;
}

Poly qx_to_poly(const QX& a, const VarOrderPtr& order, std::size_t var) {
    Poly out(order);
    if (a.is_zero()) return out;
    mpz_class den = 1;
    for (const auto& q : a.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<std::pair<Exponents, mpz_class>> terms;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        Exponents e(order->size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        mpq_class scaled = a.c[i] * den;
        terms.emplace_back(std::move(e), scaled.get_num());
    }
    return Poly::from_terms(order, std::move(terms)).canonical();
}

mpq_class qx_resultant(const QX& a, const QX& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    QX A = a, B = b;
    mpq_class res = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) res = -res;
        std::swap(A, B);
    }
    while (B.deg() > 0) {
        QX r = qx_mod(A, B);
        if (r.is_zero()) return 0;
        int da = A.deg(), db = B.deg(), dr = r.deg();
        mpq_class lb = B.lc();
        mpq_class scale = 1;
        for (int i = 0; i < da - dr; ++i) scale *= lb;
        if ((da & 1) && (db & 1)) scale = -scale;
        res *= scale;
        A = B;
        B = r;
    }
    // B is a nonzero constant
    mpq_class lb = B.c[0];
    for (int i = 0; i < A.deg(); ++i) res *= lb;
    return res;
}

namespace {

void zx_trim(std::vector<mpz_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zx_eval(const std::vector<mpz_class>& a, const mpz_class& xi) {
    mpz_class acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * xi + a[i];
    return acc;
}

// exact division of dense integer polynomials; false if not divisible
bool zx_divexact_poly(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                      std::vector<mpz_class>& q) {
    if (b.empty()) return false;
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    std::vector<mpz_class> r = a;
    q.assign(a.size() - b.size() + 1, 0);
    const mpz_class& lb = b.back();
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        if (r[static_cast<std::size_t>(i)] == 0) continue;
        if (!mpz_divisible_p(r[static_cast<std::size_t>(i)].get_mpz_t(), lb.get_mpz_t()))
            return false;
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), r[static_cast<std::size_t>(i)].get_mpz_t(),
                     lb.get_mpz_t());
        std::size_t shift = static_cast<std::size_t>(i) - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
    }
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
std::vector<mpz_class> zx_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        mpz_class c = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        zx_trim(a);
    }
    return a;
}

mpz_class zx_content(const std::vector<mpz_class>& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// primitive gcd of dense integer polynomials: heuristic evaluation gcd with
// division verification, subresultant remainder sequence as the fallback
std::vector<mpz_class> zx_gcd_dense(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    zx_trim(a);
    zx_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    mpz_class ca = zx_content(a), cb = zx_content(b);
    mpz_class g0;
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());

    auto finish = [&](std::vector<mpz_class> g) {
        mpz_class c = zx_content(g);
        if (g.back() < 0) c = -c;
        for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (auto& x : g) x *= g0;
        return g;
    };
    if (a.size() == 1 || b.size() == 1) return {g0};

    mpz_class norm = 0;
    for (const auto& c : a) if (abs(c) > norm) norm = abs(c);
    for (const auto& c : b) if (abs(c) > norm) norm = abs(c);
    mpz_class xi = 2 * norm + 29;
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpz_class va = zx_eval(a, xi), vb = zx_eval(b, xi);
        if (va != 0 && vb != 0) {
            mpz_class gamma;
            mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
            std::vector<mpz_class> g;
            mpz_class rest = gamma, half = xi / 2;
            while (rest != 0) {
                mpz_class digit = rest % xi;
                if (digit > half) digit -= xi;
                if (digit < -half) digit += xi;
                g.push_back(digit);
                rest = (rest - digit) / xi;
            }
            zx_trim(g);
            if (!g.empty()) {
                mpz_class c = zx_content(g);
                if (g.back() < 0) c = -c;
                for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
                std::vector<mpz_class> q;
                if (zx_divexact_poly(a, g, q) && zx_divexact_poly(b, g, q))
                    return finish(std::move(g));
            }
        }
        xi = xi * 7 + 3;
    }

    // subresultant fallback
    std::vector<mpz_class> A = a, B = b;
    if (A.size() < B.size()) std::swap(A, B);
    std::vector<mpz_class> g{1}, h{1};
    while (true) {
        int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        std::vector<mpz_class> R = zx_prem(A, B);
        if (R.empty()) return finish(std::move(B));
        if (R.size() == 1) return {g0};
        std::vector<mpz_class> divisor = g;
        for (int i = 0; i < delta; ++i) {
            std::vector<mpz_class> t(divisor.size());
            for (std::size_t j = 0; j < divisor.size(); ++j) t[j] = divisor[j] * h[0];
            divisor = std::move(t);
        }
        std::vector<mpz_class> Bnew;
        if (!zx_divexact_poly(R, divisor, Bnew))
            throw MathError("subresultant chain division failed");
        A = std::move(B);
        B = std::move(Bnew);
        g = {A.back()};
        if (delta > 0) {
            mpz_class gd = 1;
            for (int i = 0; i < delta; ++i) gd *= g[0];
            mpz_class hd = 1;
            for (int i = 0; i + 1 < delta; ++i) hd *= h[0];
            mpz_class hnew;
            mpz_divexact(hnew.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
            h = {hnew};
        }
    }
}



} // namespace

mpq_class zx_resultant(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    zx_trim(a);
    zx_trim(b);
    if (a.empty() || b.empty()) return 0;
    mpq_class acc = 1;
    if (a.size() < b.size()) {
        if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) acc = -acc;
        std::swap(a, b);
    }
    if (b.size() == 2) {
        // linear divisor: res(A, c1 x + c0) = (-1)^deg(A) sum a_k (-c0)^k c1^(deg(A)-k)
        const mpz_class& c0 = b[0];
        const mpz_class& c1 = b[1];
        int da = static_cast<int>(a.size()) - 1;
        std::vector<mpz_class> c1pow(static_cast<std::size_t>(da) + 1);
        c1pow[0] = 1;
        for (int i = 1; i <= da; ++i)
            c1pow[static_cast<std::size_t>(i)] = c1pow[static_cast<std::size_t>(i - 1)] * c1;
        mpz_class val = 0;
        for (int k = da; k >= 0; --k)
            val = val * (-c0) +
                  a[static_cast<std::size_t>(k)] * c1pow[static_cast<std::size_t>(da - k)];
        if (da & 1) val = -val;
        return acc * mpq_class(val);
    }
    while (b.size() > 1) {
        int da = static_cast<int>(a.size()) - 1;
        int db = static_cast<int>(b.size()) - 1;
        std::vector<mpz_class> r = zx_prem(a, b);
        if (r.empty()) return 0;
        int dr = static_cast<int>(r.size()) - 1;
        // res(a,b) = (-1)^(da*db) lb^(da-dr) res(b, a mod b),
        // a mod b = r / lb^(da-db+1), and res(b, s*r') = s^db res(b, r')
        const mpz_class& lb = b.back();
        mpz_class c = zx_content(r);
        mpq_class scale = 1;
        for (int i = 0; i < da - dr; ++i) scale *= lb;
        mpq_class shrink = 1;
        for (int i = 0; i < (da - db + 1) * db; ++i) shrink *= lb;
        mpq_class grow = 1;
        for (int i = 0; i < db; ++i) grow *= c;
        if ((da & 1) && (db & 1)) scale = -scale;
        acc *= scale * grow / shrink;
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        a = std::move(b);
        b = std::move(r);
    }
    mpq_class lb(b.front());
    for (std::size_t i = 1; i < a.size(); ++i) acc *= lb; // lb^(deg a)
    return acc;
}

std::vector<mpz_class> qx_small_integer_roots(const QX& a) {
    std::vector<mpz_class> roots;
    if (a.is_zero() || a.is_constant()) return roots;
    QX f = a;
    // strip x^k
    std::size_t low = 0;
    while (low < f.c.size() && f.c[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        f.c.erase(f.c.begin(), f.c.begin() + static_cast<long>(low));
    }
    if (f.is_constant()) return roots;
    // clear denominators, then trial-divide small divisors of the constant term
    mpz_class den = 1;
    for (const auto& q : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class c0 = mpq_class(f.c.front() * den).get_num();
    const long cap = 4096;
    std::vector<mpz_class> candidates;
    for (long d = 1; d <= cap; ++d) {
        if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(d))) {
            candidates.emplace_back(d);
            candidates.emplace_back(-d);
        }
    }
    for (const auto& r : candidates) {
        if (f.eval(mpq_class(r)) == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace mptri
