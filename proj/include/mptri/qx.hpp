#ifndef MPTRI_QX_HPP
#define MPTRI_QX_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "mptri/poly.hpp"

namespace mptri {

// Dense univariate polynomial over Q.  c[i] is the coefficient of x^i;
// the leading coefficient is nonzero (empty vector = zero polynomial).
struct QX {
    std::vector<mpq_class> c;

    QX() = default;
    explicit QX(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }
    static QX constant(const mpq_class& v);
    static QX x();

    void trim();
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const mpq_class& lc() const;
    mpq_class eval(const mpq_class& a) const;
};

QX qx_add(const QX& a, const QX& b);
QX qx_sub(const QX& a, const QX& b);
QX qx_mul(const QX& a, const QX& b);
QX qx_scale(const QX& a, const mpq_class& s);
QX qx_neg(const QX& a);
bool qx_eq(const QX& a, const QX& b);

// quotient and remainder over the field Q
std::pair<QX, QX> qx_divrem(const QX& a, const QX& b);
QX qx_mod(const QX& a, const QX& m);
QX qx_div(const QX& a, const QX& b); // throws NonExactDivision on remainder

QX qx_monic(const QX& a);
QX qx_derivative(const QX& a);
QX qx_gcd(const QX& a, const QX& b); // monic
// g = gcd(a,b) monic together with u, v such that u*a + v*b = g
struct QxExtGcd { QX g, u, v; };
QxExtGcd qx_ext_gcd(const QX& a, const QX& b);

// Yun's squarefree decomposition: list of (monic squarefree factor, exponent),
// factors pairwise coprime, product of factor^exponent = a up to a constant
std::vector<std::pair<QX, int>> qx_squarefree(const QX& a);

// conversions against a Poly built on `order`, where the polynomial is
// univariate in variable `var`
QX qx_from_poly(const Poly& p, std::size_t var);
Poly qx_to_poly(const QX& a, const VarOrderPtr& order, std::size_t var); // primitive integer canonical

// integer roots of a (exact), found by bounded search over divisors of the
// trailing coefficient; used to split rational points out of moduli
std::vector<mpz_class> qx_small_integer_roots(const QX& a);

// resultant of two univariate polynomials over Q via the Euclidean remainder
// chain (0 when they share a factor)
mpq_class qx_resultant(const QX& a, const QX& b);

// resultant of two integer polynomials (dense coefficient vectors, constant
// term first) via a primitive pseudo-remainder chain; coefficient growth
// stays controlled, the scalar corrections are tracked exactly
mpq_class zx_resultant(std::vector<mpz_class> a, std::vector<mpz_class> b);

} // namespace mptri

#endif
