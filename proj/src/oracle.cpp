#include "mptri/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mptri/qx.hpp"

namespace mptri {

Poly shear_substitution(const Poly& f, long s, std::size_t var_x, std::size_t var_y) {
    Poly repl = Poly::variable(f.order(), var_x) +
                Poly::variable(f.order(), var_y) * mpz_class(s);
    return f.substitute(var_x, repl);
}

Poly sylvester_resultant(const Poly& f, const Poly& g, std::size_t var) {
    int d1 = f.degree(var), d2 = g.degree(var);
    if (d1 < 1 || d2 < 1)
        throw MathError("Sylvester resultant requires both inputs to depend on the variable");
    const VarOrderPtr order = f.order();
    const int n = d1 + d2;
    std::vector<std::vector<Poly>> M(static_cast<std::size_t>(n),
                                     std::vector<Poly>(static_cast<std::size_t>(n), Poly(order)));
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j <= d1; ++j)
            M[i][i + j] = f.coefficient(var, static_cast<std::uint32_t>(d1 - j));
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j <= d2; ++j)
            M[d2 + i][i + j] = g.coefficient(var, static_cast<std::uint32_t>(d2 - j));

    // fraction-free Bareiss elimination
    int sign = 1;
    Poly prev(order, 1);
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!M[r][k].is_zero()) { swap_row = r; break; }
            }
            if (swap_row < 0) return Poly(order); // singular: resultant 0
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                M[i][j] = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = Poly(order);
        }
        prev = M[k][k];
    }
    Poly det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

ShearedSystem apply_shear(const Poly& f1, const Poly& f2, long s) {
    ShearedSystem out;
    out.shear = s;
    std::size_t vx = 0, vy = f1.order()->main_index();
    out.f1s = shear_substitution(f1, s, vx, vy);
    out.f2s = shear_substitution(f2, s, vx, vy);
    auto lc_const = [&](const Poly& orig, const Poly& sheared) {
        int d = orig.total_degree();
        if (d <= 0) return true;
        Poly lc = sheared.coefficient(vy, static_cast<std::uint32_t>(d));
        return !lc.is_zero() && lc.is_constant();
    };
    out.lc_constant = lc_const(f1, out.f1s) && lc_const(f2, out.f2s);
    return out;
}

namespace {

struct ShearRecord {
    long s;
    Poly resultant;
    std::vector<std::pair<QX, int>> layers; // squarefree factor, multiplicity
    std::multiset<std::pair<int, int>> signature; // (factor degree, multiplicity)
    int ndistinct = 0;
};

} // namespace

OracleReport multiplicities_by_shear(const Poly& f1, const Poly& f2) {
    if (f1.is_zero() || f2.is_zero()) throw MathError("oracle on a zero polynomial");
    const VarOrderPtr order = f1.order();
    if (order->size() != 2) throw MathError("oracle supports bivariate systems");
    Poly g = gcd(f1, f2);
    if (!g.is_constant()) throw CommonFactor(g);

    OracleReport rep;
    if (f1.is_constant() || f2.is_constant()) return rep; // no common zeros

    const std::size_t vy = 1;
    std::vector<ShearRecord> records;
    int best_distinct = -1;

    for (int trial = 1; trial <= 16; ++trial) {
        long s = (trial % 2 == 1) ? (trial + 1) / 2 : -(trial / 2);
        ShearedSystem sys = apply_shear(f1, f2, s);
        if (!sys.lc_constant) continue;
        Poly R = sylvester_resultant(sys.f1s, sys.f2s, vy);
        if (R.is_zero())
            throw OracleFailure("sheared resultant vanished for a coprime system");

        ShearRecord rec;
        rec.s = s;
        rec.resultant = R.canonical();
        if (!rec.resultant.is_constant()) {
            QX rx = qx_from_poly(rec.resultant, 0);
            rec.layers = qx_squarefree(rx);
        }
        for (const auto& [factor, mult] : rec.layers) {
            rec.signature.emplace(factor.deg(), mult);
            rec.ndistinct += factor.deg();
        }
        best_distinct = std::max(best_distinct, rec.ndistinct);
        records.push_back(std::move(rec));

        // certified once two shears at the maximal distinct-root count agree
        for (std::size_t i = 0; i < records.size(); ++i) {
            for (std::size_t j = i + 1; j < records.size(); ++j) {
                const auto& a = records[i];
                const auto& b = records[j];
                if (a.ndistinct != best_distinct || b.ndistinct != best_distinct) continue;
                if (a.signature != b.signature) continue;
                rep.shears = {a.s, b.s};
                rep.resultants = {a.resultant, b.resultant};
                for (const auto& [factor, mult] : a.layers) {
                    OraclePointClass pc;
                    pc.factor = qx_to_poly(factor, order, 0);
                    pc.multiplicity = mult;
                    pc.count = factor.deg();
                    rep.total += static_cast<long long>(mult) * factor.deg();
                    rep.per_point.push_back(std::move(pc));
                }
                return rep;
            }
        }
    }
    throw OracleFailure(
        "no certified shear found; the system may be positive-dimensional or have "
        "solutions at infinity");
}

namespace {

// dense coefficient rows of a bivariate polynomial: rows[k][j] is the
// coefficient of row_var^k col_var^j
struct CoeffRows {
    std::vector<std::vector<mpz_class>> rows;
    int row_deg = 0;
};

CoeffRows coeff_rows(const Poly& p, std::size_t row_var, std::size_t col_var) {
    CoeffRows out;
    out.row_deg = p.degree(row_var);
    out.rows.assign(static_cast<std::size_t>(out.row_deg) + 1, {});
    for (auto& row : out.rows)
        row.assign(static_cast<std::size_t>(std::max(0, p.degree(col_var))) + 1, 0);
    for (const auto& [e, c] : p.terms()) out.rows[e[row_var]][e[col_var]] = c;
    return out;
}

// ----- word-prime modular arithmetic for the big-resultant path -----

using u64 = std::uint64_t;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

const std::vector<u64>& word_primes(std::size_t need) {
    static std::vector<u64> primes;
    static mpz_class cursor = mpz_class(1) << 62;
    while (primes.size() < need) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        primes.push_back(cursor.get_ui());
    }
    return primes;
}

// resultant of dense polynomials over GF(p) via the Euclidean recurrence
u64 fp_resultant(std::vector<u64> a, std::vector<u64> b, const Fp& F) {
    auto trim = [](std::vector<u64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    u64 acc = 1;
    bool neg = false;
    if (a.size() < b.size()) {
        if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) neg = !neg;
        std::swap(a, b);
    }
    while (b.size() > 1) {
        std::size_t da = a.size() - 1, db = b.size() - 1;
        // r = a mod b
        u64 invlb = F.inv(b.back());
        std::vector<u64> r = a;
        for (std::size_t i = r.size(); i-- >= b.size();) {
            u64 f = F.mul(r[i], invlb);
            if (f != 0) {
                std::size_t shift = i - db;
                for (std::size_t j = 0; j < b.size(); ++j)
                    r[shift + j] = F.sub(r[shift + j], F.mul(f, b[j]));
            }
            if (i == 0) break;
        }
        trim(r);
        if (r.empty()) return 0;
        std::size_t dr = r.size() - 1;
        acc = F.mul(acc, F.pow(b.back(), static_cast<u64>(da - dr)));
        if ((da & 1) && (db & 1)) neg = !neg;
        a = std::move(b);
        b = std::move(r);
    }
    acc = F.mul(acc, F.pow(b.front(), static_cast<u64>(a.size() - 1)));
    return neg ? F.sub(0, acc) : acc;
}

// Exact resultant of A and B w.r.t. elim_var, output univariate in out_var,
// by CRT over word primes with one interpolation per prime.  deg_bound must
// bound the out_var-degree of the result.  The coefficient bound is the
// permanent bound on the Sylvester-matrix row 1-norms.
Poly modular_resultant(const Poly& A, const Poly& B, std::size_t elim_var,
                       std::size_t out_var, long deg_bound) {
    const VarOrderPtr order = A.order();
    const int da = A.degree(elim_var), db = B.degree(elim_var);

    auto one_norm_bits = [](const Poly& p) {
        mpz_class n = 0;
        for (const auto& [e, c] : p.terms()) n += abs(c);
        return n == 0 ? std::size_t(1) : mpz_sizeinbase(n.get_mpz_t(), 2);
    };
    const std::size_t bound_bits = static_cast<std::size_t>(db) * one_norm_bits(A) +
                                   static_cast<std::size_t>(da) * one_norm_bits(B) + 2;

    CoeffRows ra = coeff_rows(A, elim_var, out_var);
    CoeffRows rb = coeff_rows(B, elim_var, out_var);
    const std::size_t npoints = static_cast<std::size_t>(deg_bound) + 1;

    std::vector<mpz_class> crt(npoints, 0); // coefficient residues
    mpz_class modulus = 1;

    std::size_t prime_idx = 0;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bound_bits) {
        const auto& primes = word_primes(prime_idx + 1);
        Fp F{primes[prime_idx++]};

        auto reduce_rows = [&](const CoeffRows& yr) {
            std::vector<std::vector<u64>> out(yr.rows.size());
            for (std::size_t k = 0; k < yr.rows.size(); ++k) {
                out[k].resize(yr.rows[k].size());
                for (std::size_t j = 0; j < yr.rows[k].size(); ++j)
                    out[k][j] = mpz_fdiv_ui(yr.rows[k][j].get_mpz_t(), F.p);
            }
            return out;
        };
        auto ma = reduce_rows(ra), mb = reduce_rows(rb);
        auto row_zero = [](const std::vector<u64>& row) {
            for (u64 v : row)
                if (v) return false;
            return true;
        };
        if (row_zero(ma.back()) || row_zero(mb.back())) continue; // degree lost mod p

        auto eval_mod = [&](const std::vector<std::vector<u64>>& rows, u64 x) {
            std::vector<u64> c(rows.size());
            for (std::size_t k = 0; k < rows.size(); ++k) {
                u64 acc = 0;
                for (std::size_t j = rows[k].size(); j-- > 0;)
                    acc = F.add(F.mul(acc, x), rows[k][j]);
                c[k] = acc;
            }
            return c;
        };

        // values of the resultant at npoints nodes with full degrees mod p
        std::vector<u64> nodes, values;
        for (u64 x = 0; nodes.size() < npoints && x < F.p; ++x) {
            auto va = eval_mod(ma, x);
            auto vb = eval_mod(mb, x);
            if (va.back() == 0 || vb.back() == 0) continue;
            nodes.push_back(x);
            values.push_back(fp_resultant(va, vb, F));
        }
        if (nodes.size() < npoints) continue;

        // Newton interpolation mod p
        std::vector<u64> divided = values;
        for (std::size_t lvl = 1; lvl < npoints; ++lvl) {
            for (std::size_t i = npoints - 1; i >= lvl; --i) {
                u64 dx = F.sub(nodes[i], nodes[i - lvl]);
                divided[i] = F.mul(F.sub(divided[i], divided[i - 1]), F.inv(dx));
            }
        }
        std::vector<u64> coef{divided.back()};
        for (std::size_t i = npoints - 1; i-- > 0;) {
            // coef = coef * (x - nodes[i]) + divided[i]
            std::vector<u64> next(coef.size() + 1, 0);
            for (std::size_t j = 0; j < coef.size(); ++j) {
                next[j + 1] = F.add(next[j + 1], coef[j]);
                next[j] = F.sub(next[j], F.mul(nodes[i], coef[j]));
            }
            next[0] = F.add(next[0], divided[i]);
            coef = std::move(next);
        }
        coef.resize(npoints, 0);

        // CRT-lift the coefficients
        u64 minv_inv = F.inv(mpz_fdiv_ui(modulus.get_mpz_t(), F.p));
        for (std::size_t i = 0; i < npoints; ++i) {
            u64 cur = mpz_fdiv_ui(crt[i].get_mpz_t(), F.p);
            u64 delta = F.mul(F.sub(coef[i], cur), minv_inv);
            crt[i] += modulus * mpz_class(delta);
        }
        modulus *= mpz_class(F.p);
    }

    // symmetric lift into the integers
    mpz_class half = modulus / 2;
    std::vector<std::pair<Exponents, mpz_class>> terms;
    for (std::size_t i = 0; i < npoints; ++i) {
        mpz_class v = crt[i];
        if (v > half) v -= modulus;
        if (v == 0) continue;
        Exponents e(order->size(), 0);
        e[out_var] = static_cast<std::uint32_t>(i);
        terms.emplace_back(std::move(e), std::move(v));
    }
    return Poly::from_terms(order, std::move(terms));
}

// Exact eliminant of a triangular pair (g in K[x], h in K[x,y]) under the
// shear x -> x + s y, up to a nonzero constant.  Uses the unsheared
// formulation Res_u(g(u), s^t h(u, (u - x')/s)), whose second argument has
// out-degree t = deg_y(h), so the result has degree at most deg(g) * t.
Poly component_eliminant(const Poly& lower, const Poly& upper, long s, std::size_t vy) {
    const VarOrderPtr order = lower.order();
    const std::size_t vx = 0;
    int dg = lower.total_degree();
    int t = upper.degree(vy);
    if (dg < 1 || t < 1) throw MathError("degenerate pair in eliminant");

    if (dg + upper.total_degree() <= 14) {
        Poly lo = shear_substitution(lower, s, vx, vy);
        Poly up = shear_substitution(upper, s, vx, vy);
        if (lo.degree(vy) < 1 || up.degree(vy) < 1)
            throw MathError("pair degenerates under the shear");
        return sylvester_resultant(lo, up, vy);
    }

    // H(u, x') = sum_k h_k(u) (u - x')^k s^(t-k), with u in the x slot and
    // x' in the y slot
    Poly u_minus_xp = Poly::variable(order, vx) - Poly::variable(order, vy);
    Poly H(order);
    Poly shift_pow(order, 1);
    mpz_class s_mp(s);
    for (int k = 0; k <= t; ++k) {
        Poly hk = upper.coefficient(vy, static_cast<std::uint32_t>(k));
        if (!hk.is_zero()) {
            mpz_class scale = 1;
            for (int i = 0; i < t - k; ++i) scale *= s_mp;
            H += hk * shift_pow * scale;
        }
        if (k < t) shift_pow *= u_minus_xp;
    }
    if (H.degree(vx) < 1) {
        // the eliminant degenerates to H^deg(g) up to a constant
        return H.pow(static_cast<unsigned>(dg));
    }
    Poly res = modular_resultant(lower, H, vx, vy, static_cast<long>(dg) * t);
    // the result lives in the y slot; move it back to x
    std::vector<std::pair<Exponents, mpz_class>> terms;
    for (const auto& [e, c] : res.terms()) {
        Exponents e2(order->size(), 0);
        e2[vx] = e[vy];
        terms.emplace_back(std::move(e2), c);
    }
    return Poly::from_terms(order, std::move(terms));
}

// squarefree-layer comparison of the two x-eliminants
void emit_diff(const Poly& Dc, const Poly& Rc, long s, CrossCheckResult& out) {
    const VarOrderPtr order = Rc.order();
    std::map<int, QX> dl, rl;
    if (!Dc.is_constant())
        for (const auto& [f, m] : qx_squarefree(qx_from_poly(Dc, 0))) dl[m] = f;
    if (!Rc.is_constant())
        for (const auto& [f, m] : qx_squarefree(qx_from_poly(Rc, 0))) rl[m] = f;
    std::vector<int> mults;
    for (const auto& [m, f] : dl) mults.push_back(m);
    for (const auto& [m, f] : rl) mults.push_back(m);
    std::sort(mults.begin(), mults.end());
    mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
    for (int m : mults) {
        QX a = dl.count(m) ? dl[m] : QX::constant(1);
        QX b = rl.count(m) ? rl[m] : QX::constant(1);
        QX c = qx_gcd(a, b);
        QX extra_d = qx_div(a, c), extra_r = qx_div(b, c);
        if (extra_d.is_constant() && extra_r.is_constant()) continue;
        out.diff.push_back("shear " + std::to_string(s) + ", multiplicity " +
                           std::to_string(m) + ": decomposition side " +
                           qx_to_poly(extra_d, order, 0).to_string() + ", oracle side " +
                           qx_to_poly(extra_r, order, 0).to_string());
    }
    if (out.diff.empty())
        out.diff.push_back("shear " + std::to_string(s) +
                           ": eliminants differ by a constant factor only");
}

} // namespace

CrossCheckResult cross_check(const Decomposition& d, const OracleReport& r) {
    CrossCheckResult out;
    if (!d.negatives.empty() || !d.pending.empty())
        throw MathError("cross-check requires an all-positive decomposition");

    if (r.shears.empty()) {
        // system with no common zeros: the decomposition must be empty
        if (!d.positives.empty()) {
            out.match = false;
            out.diff.push_back("oracle reports no zeros but the decomposition is nonempty");
        }
        return out;
    }

    const std::size_t vy = 1;

    for (std::size_t t = 0; t < r.shears.size(); ++t) {
        long s = r.shears[t];
        const Poly& R = r.resultants[t];
        const VarOrderPtr order = R.order();

        Poly D(order, 1);
        bool broken = false;
        for (const auto& comp : d.positives) {
            if (comp.triset.lower.total_degree() < 1 || comp.triset.upper.degree(vy) < 1) {
                out.match = false;
                out.diff.push_back("component (" + comp.triset.lower.to_string() + ", " +
                                   comp.triset.upper.to_string() +
                                   ") is not a zero-dimensional triangular pair");
                broken = true;
                break;
            }
            Poly res = component_eliminant(comp.triset.lower, comp.triset.upper, s, vy);
            if (res.is_zero()) {
                out.match = false;
                out.diff.push_back("component (" + comp.triset.lower.to_string() + ", " +
                                   comp.triset.upper.to_string() +
                                   ") has infinitely many zeros");
                broken = true;
                break;
            }
            D *= res.canonical().pow(static_cast<unsigned>(comp.weight));
        }
        if (broken) continue;

        Poly Dc = D.canonical();
        Poly Rc = R.canonical();
        if (Dc == Rc) continue;
        out.match = false;
        emit_diff(Dc, Rc, s, out);
    }
    return out;
}

} // namespace mptri
