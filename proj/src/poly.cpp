#include "mptri/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace mptri {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long ta = 0, tb = 0;
    for (auto e : a) ta += e;
    for (auto e : b) tb += e;
    if (ta != tb) return ta > tb;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Poly::Poly(VarOrderPtr order, mpz_class constant) : order_(std::move(order)) {
    if (constant != 0) terms_.emplace(Exponents(order_->size(), 0), std::move(constant));
}

Poly Poly::variable(VarOrderPtr order, std::size_t var) {
    if (var >= order->size()) throw MathError("variable index out of range");
    Exponents e(order->size(), 0);
    e[var] = 1;
    Poly p(order);
    p.terms_.emplace(std::move(e), 1);
    return p;
}

Poly Poly::monomial(VarOrderPtr order, Exponents exps, mpz_class coeff) {
    if (exps.size() != order->size()) throw MathError("exponent vector length mismatch");
    Poly p(order);
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

Poly Poly::from_terms(VarOrderPtr order, std::vector<std::pair<Exponents, mpz_class>> terms) {
    Poly p(order);
    for (auto& [e, c] : terms) {
        if (e.size() != order->size()) throw MathError("exponent vector length mismatch");
        p.insert_term(std::move(e), std::move(c));
    }
    return p;
}

void Poly::insert_term(Exponents e, mpz_class c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_order(const Poly& o) const {
    if (order_ == o.order_) return;
    if (order_ && o.order_ && *order_ == *o.order_) return;
    throw MathError("polynomials built against different variable orders");
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Poly::is_one() const { return is_constant() && constant_value() == 1; }

mpz_class Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw MathError("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::degree(std::size_t var) const {
    if (order_ && var >= order_->size()) throw MathError("variable index out of range");
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto x : e) t += x;
        best = std::max(best, t);
    }
    return static_cast<int>(best);
}

Poly Poly::coefficient(std::size_t var, std::uint32_t k) const {
    Poly out(order_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == k) {
            Exponents e2 = e;
            e2[var] = 0;
            out.terms_.emplace(std::move(e2), c);
        }
    }
    return out;
}

Poly Poly::leading_coefficient(std::size_t var) const {
    int d = degree(var);
    if (d < 0) return Poly(order_);
    return coefficient(var, static_cast<std::uint32_t>(d));
}

mpz_class Poly::leading_term_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly out(order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_order(o);
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.insert_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_order(o);
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.insert_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_order(o);
    Poly out(order_);
    if (terms_.empty() || o.terms_.empty()) return out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.insert_term(std::move(e), ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const mpz_class& c) const {
    Poly out(order_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (order_ && o.order_ && !(*order_ == *o.order_)) return false;
    return terms_ == o.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly out(order_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

Poly Poly::substitute(std::size_t var, const Poly& repl) const {
    check_same_order(repl);
    Poly out(order_);
    std::vector<Poly> powers{Poly(order_, 1)};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * repl);
        Exponents e2 = e;
        e2[var] = 0;
        out += Poly::monomial(order_, std::move(e2), c) * powers[e[var]];
    }
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(order_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        e2[var] -= 1;
        out.insert_term(std::move(e2), c * e[var]);
    }
    return out;
}

mpz_class Poly::int_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::canonical() const {
    if (terms_.empty()) return *this;
    mpz_class g = int_content();
    if (leading_term_coeff() < 0) g = -g;
    Poly out(order_);
    for (const auto& [e, c] : terms_) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.terms_.emplace(e, std::move(q));
    }
    return out;
}

Poly Poly::sign_normalized() const {
    if (terms_.empty() || leading_term_coeff() > 0) return *this;
    return -*this;
}

bool Poly::is_canonical() const {
    if (terms_.empty()) return true;
    return int_content() == 1 && leading_term_coeff() > 0;
}

mpz_class Poly::eval_int(const std::vector<mpz_class>& point) const {
    if (order_ && point.size() != order_->size()) throw MathError("evaluation point arity mismatch");
    mpz_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t j = 0; j < e[i]; ++j) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool coeff_shown = (a != 1) || !has_vars;
        if (coeff_shown) os << a.get_str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << order_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

int Poly::compare(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GradedLexGreater gt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (gt(ia->first, ib->first)) return -1;
        if (gt(ib->first, ia->first)) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
    }
    if (ia != a.terms_.end()) return -1;
    if (ib != b.terms_.end()) return 1;
    return 0;
}

// ----- free operations -----

int degree(const Poly& p, std::size_t var) { return p.degree(var); }

Poly content(const Poly& p, std::size_t var) {
    if (p.is_zero()) throw MathError("content of the zero polynomial");
    Poly g(p.order());
    int d = p.degree(var);
    for (int k = 0; k <= d; ++k) {
        Poly c = p.coefficient(var, static_cast<std::uint32_t>(k));
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.sign_normalized() : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
    if (p.is_zero()) throw MathError("primitive part of the zero polynomial");
    Poly c = content(p, var);
    if (c.is_one()) return p;
    return divide_exact(p, c);
}

bool is_primitive(const Poly& p, std::size_t var) {
    return !p.is_zero() && content(p, var).is_constant() &&
           content(p, var).constant_value() == 1;
}

Poly pseudo_remainder(const Poly& f, const Poly& g, std::size_t var) {
    return pseudo_divide_extended(f, g, var).remainder;
}

PseudoDivResult pseudo_divide_extended(const Poly& f, const Poly& g, std::size_t var) {
    if (g.is_zero()) throw MathError("pseudo-division by the zero polynomial");
    if (f.order() && var >= f.order()->size()) throw MathError("variable index out of range");
    int d1 = f.degree(var), d2 = g.degree(var);
    if (d1 <= 0 && d2 <= 0)
        throw MathError("pseudo-division: neither operand depends on the variable");
    if (d1 < d2) throw MathError("pseudo-division requires deg(f) >= deg(g)");
    int delta = d1 - d2;

    const Poly l = g.leading_coefficient(var);
    const VarOrderPtr order = f.order() ? f.order() : g.order();
    Poly r = f;
    Poly q(order);
    for (int step = 0; step <= delta; ++step) {
        std::uint32_t target = static_cast<std::uint32_t>(d1 - step);
        Poly c = r.coefficient(var, target);
        Exponents shift(order->size(), 0);
        shift[var] = target - static_cast<std::uint32_t>(d2);
        Poly xs = Poly::monomial(order, shift, 1);
        r = l * r - c * xs * g;
        q = l * q - c * xs;
    }
    PseudoDivResult out;
    out.multiplier = l.pow(static_cast<unsigned>(delta + 1));
    out.quotient = std::move(q);
    out.remainder = std::move(r);
    out.delta = delta;
    if (out.remainder.degree(var) >= d2)
        throw MathError("pseudo-division failed to reduce the degree");
    return out;
}

bool divides(const Poly& q, const Poly& p) {
    if (q.is_zero()) return p.is_zero();
    try {
        (void)divide_exact(p, q);
        return true;
    } catch (const NonExactDivision&) {
        return false;
    }
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw MathError("division by the zero polynomial");
    const VarOrderPtr order = p.order() ? p.order() : q.order();
    Poly r = p;
    Poly quot(order);
    const auto& qlead = *q.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        Exponents e(rlead.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (rlead.first[i] < qlead.first[i])
                throw NonExactDivision("non-exact polynomial division");
            e[i] = rlead.first[i] - qlead.first[i];
        }
        if (!mpz_divisible_p(rlead.second.get_mpz_t(), qlead.second.get_mpz_t()))
            throw NonExactDivision("non-exact polynomial division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rlead.second.get_mpz_t(), qlead.second.get_mpz_t());
        Poly t = Poly::monomial(order, std::move(e), std::move(c));
        quot += t;
        r -= t * q;
    }
    return quot;
}

namespace {

// highest variable index on which either polynomial depends, or -1
int top_variable(const Poly& a, const Poly& b) {
    for (std::size_t v = a.nvars(); v-- > 0;) {
        if (a.degree(v) > 0 || b.degree(v) > 0) return static_cast<int>(v);
    }
    return -1;
}

Poly gcd_rec(const Poly& a, const Poly& b);

bool univariate_in(const Poly& p, std::size_t var) {
    for (std::size_t v = 0; v < p.nvars(); ++v)
        if (v != var && p.degree(v) > 0) return false;
    return true;
}

mpz_class eval_univariate(const Poly& p, std::size_t var, const mpz_class& xi) {
    int d = p.degree(var);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [e, c] : p.terms()) coeffs[e[var]] = c;
    mpz_class acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * xi + coeffs[i];
    return acc;
}

// Heuristic gcd for univariate integer polynomials: evaluate at a large
// point, take the integer gcd, lift its balanced base-xi digits back to a
// polynomial and verify by exact division.  Returns nothing when the
// candidate fails; the caller falls back to the remainder-sequence gcd.
std::optional<Poly> heuristic_gcd_univariate(const Poly& a, const Poly& b, std::size_t var) {
    const VarOrderPtr order = a.order();
    mpz_class ca = a.int_content(), cb = b.int_content();
    mpz_class g0;
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly A(order), B(order);
    {
        mpz_class q;
        std::vector<std::pair<Exponents, mpz_class>> terms;
        for (const auto& [e, c] : a.terms()) {
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
            terms.emplace_back(e, q);
        }
        A = Poly::from_terms(order, std::move(terms));
        terms.clear();
        for (const auto& [e, c] : b.terms()) {
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
            terms.emplace_back(e, q);
        }
        B = Poly::from_terms(order, std::move(terms));
    }
    mpz_class norm = 0;
    for (const auto& [e, c] : A.terms()) {
        mpz_class ac = abs(c);
        if (ac > norm) norm = ac;
    }
    for (const auto& [e, c] : B.terms()) {
        mpz_class ac = abs(c);
        if (ac > norm) norm = ac;
    }
    mpz_class xi = 2 * norm + 29;
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpz_class va = eval_univariate(A, var, xi);
        mpz_class vb = eval_univariate(B, var, xi);
        if (va == 0 || vb == 0) {
            xi = xi * 7 + 3;
            continue;
        }
        mpz_class gamma;
        mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        // lift balanced digits
        std::vector<std::pair<Exponents, mpz_class>> terms;
        mpz_class rest = gamma;
        mpz_class half = xi / 2;
        std::uint32_t power = 0;
        while (rest != 0) {
            mpz_class digit = rest % xi;
            if (digit > half) digit -= xi;
            if (digit < -half) digit += xi;
            if (digit != 0) {
                Exponents e(order->size(), 0);
                e[var] = power;
                terms.emplace_back(std::move(e), digit);
            }
            rest = (rest - digit) / xi;
            ++power;
        }
        Poly G = Poly::from_terms(order, std::move(terms));
        if (G.is_zero()) {
            xi = xi * 7 + 3;
            continue;
        }
        G = G.canonical();
        if (divides(G, A) && divides(G, B)) return (G * g0).sign_normalized();
        xi = xi * 7 + 3;
    }
    return std::nullopt;
}

// content w.r.t. var via the recursive gcd (sign-normalized, not primitive)
Poly content_rec(const Poly& p, std::size_t var) {
    Poly g(p.order());
    int d = p.degree(var);
    for (int k = 0; k <= d; ++k) {
        Poly c = p.coefficient(var, static_cast<std::uint32_t>(k));
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.sign_normalized() : gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// subresultant PRS gcd of primitive a, b in var (both depend on var)
Poly gcd_prs(Poly A, Poly B, std::size_t var) {
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    Poly g(A.order(), 1), h(A.order(), 1);
    while (true) {
        int delta = A.degree(var) - B.degree(var);
        Poly R = pseudo_remainder(A, B, var);
        if (R.is_zero()) return primitive_part(B, var);
        if (R.degree(var) == 0) return Poly(A.order(), 1);
        A = B;
        B = divide_exact(R, g * h.pow(static_cast<unsigned>(delta)));
        g = A.leading_coefficient(var);
        if (delta > 0) {
            Poly gd = g.pow(static_cast<unsigned>(delta));
            h = (delta == 1) ? gd : divide_exact(gd, h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    int v = top_variable(a, b);
    if (v < 0) {
        mpz_class g;
        mpz_class ca = a.constant_value(), cb = b.constant_value();
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return Poly(a.order(), g);
    }
    auto var = static_cast<std::size_t>(v);
    if (a.degree(var) == 0) return gcd_rec(a, content_rec(b, var));
    if (b.degree(var) == 0) return gcd_rec(content_rec(a, var), b);
    if (univariate_in(a, var) && univariate_in(b, var)) {
        if (auto h = heuristic_gcd_univariate(a, b, var)) return *h;
    }
    Poly ca = content_rec(a, var), cb = content_rec(b, var);
    Poly d = gcd_rec(ca, cb);
    Poly g = gcd_prs(divide_exact(a, ca), divide_exact(b, cb), var);
    return (d * g).sign_normalized();
}

} // namespace

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw MathError("gcd(0, 0) is undefined");
    if (p.is_zero()) return q.sign_normalized();
    if (q.is_zero()) return p.sign_normalized();
    if (p == q || p == -q) return p.sign_normalized();
    return gcd_rec(p, q).sign_normalized();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw MathError("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly a = p.canonical();
    if (a.is_constant()) return out;
    // Musser's algorithm with gcd over all partial derivatives
    Poly d(a.order());
    for (std::size_t v = 0; v < a.nvars(); ++v) {
        Poly pa = a.derivative(v);
        if (pa.is_zero()) continue;
        d = d.is_zero() ? pa : gcd(d, pa);
        if (d.is_one()) break;
    }
    Poly c = gcd(a, d);                 // product of factor^(e-1)
    Poly w = divide_exact(a, c);        // squarefree part
    int e = 1;
    while (!w.is_constant()) {
        Poly y = gcd(w, c);
        Poly layer = divide_exact(w, y);
        if (!layer.is_constant()) out.emplace_back(layer.canonical(), e);
        w = y;
        c = divide_exact(c, y);
        ++e;
    }
    if (!c.is_constant())
        throw MathError("squarefree decomposition did not terminate cleanly");
    return out;
}

} // namespace mptri
