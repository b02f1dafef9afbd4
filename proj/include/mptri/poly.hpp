#ifndef MPTRI_POLY_HPP
#define MPTRI_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mptri/error.hpp"
#include "mptri/varorder.hpp"

namespace mptri {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order, descending: total degree first, ties broken by
// the exponent of the highest (latest-listed) variable.  map::begin() is the
// leading term.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients under a fixed variable order.  Values are immutable in spirit:
// every operation returns a fresh polynomial, no stored coefficient is zero,
// and the zero polynomial has an empty term map.
class Poly {
public:
    using TermMap = std::map<Exponents, mpz_class, GradedLexGreater>;

    Poly() = default; // zero polynomial with no order; usable as a placeholder only
    explicit Poly(VarOrderPtr order) : order_(std::move(order)) {}
    Poly(VarOrderPtr order, mpz_class constant);
    Poly(VarOrderPtr order, long constant) : Poly(std::move(order), mpz_class(constant)) {}

    static Poly variable(VarOrderPtr order, std::size_t var);
    static Poly monomial(VarOrderPtr order, Exponents exps, mpz_class coeff);
    static Poly from_terms(VarOrderPtr order,
                           std::vector<std::pair<Exponents, mpz_class>> terms);

    const VarOrderPtr& order() const { return order_; }
    std::size_t nvars() const { return order_ ? order_->size() : 0; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // value of a constant polynomial (0 for the zero polynomial)
    mpz_class constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // highest exponent of var among terms; -1 for the zero polynomial
    int degree(std::size_t var) const;
    int total_degree() const;
    bool depends_on(std::size_t var) const { return degree(var) > 0; }

    // coefficient of var^k, with var's exponent removed from the result
    Poly coefficient(std::size_t var, std::uint32_t k) const;
    Poly leading_coefficient(std::size_t var) const;
    // integer coefficient of the graded-lex leading term (0 for zero poly)
    mpz_class leading_term_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpz_class& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const;
    Poly substitute(std::size_t var, const Poly& repl) const;
    Poly derivative(std::size_t var) const;

    // gcd of all integer coefficients, positive; 0 for the zero polynomial
    mpz_class int_content() const;
    // integer content removed and sign flipped so the graded-lex leading
    // coefficient is positive; canonical form used for gcds and display
    Poly canonical() const;
    // sign normalization only (leading coefficient positive)
    Poly sign_normalized() const;
    bool is_canonical() const;

    // evaluate with all variables set to the given integers
    mpz_class eval_int(const std::vector<mpz_class>& point) const;

    // printed in the CLI grammar: explicit '*', '^', graded-lex descending
    std::string to_string() const;

    // deterministic total order for sorting (term-wise graded-lex, then coeff)
    static int compare(const Poly& a, const Poly& b);
    bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

private:
    void insert_term(Exponents e, mpz_class c);
    void check_same_order(const Poly& o) const;

    VarOrderPtr order_;
    TermMap terms_;
};

inline Poly operator*(const mpz_class& c, const Poly& p) { return p * c; }

// ----- polyring operations -----

int degree(const Poly& p, std::size_t var);

// gcd of the coefficients of p viewed as univariate in var; error on zero
Poly content(const Poly& p, std::size_t var);
// p / content(p, var), exact
Poly primitive_part(const Poly& p, std::size_t var);
bool is_primitive(const Poly& p, std::size_t var);

// greatest common divisor over Z[x1..xn] (integer content included),
// sign-normalized; error if both zero
Poly gcd(const Poly& p, const Poly& q);

// exact quotient p / q; throws NonExactDivision if q does not divide p
Poly divide_exact(const Poly& p, const Poly& q);
bool divides(const Poly& q, const Poly& p);

// multiplier * f + quotient * g = remainder, deg(remainder, var) < deg(g, var),
// multiplier = lc(g,var)^(delta+1), delta = deg(f,var) - deg(g,var)
struct PseudoDivResult {
    Poly multiplier;
    Poly quotient;
    Poly remainder;
    int delta = 0;
};

PseudoDivResult pseudo_divide_extended(const Poly& f, const Poly& g, std::size_t var);

// remainder of the extended pseudo-division only
Poly pseudo_remainder(const Poly& f, const Poly& g, std::size_t var);

// squarefree decomposition over Q scaled to primitive integer factors:
// returns [(factor, exponent)...] with factors pairwise coprime, squarefree,
// canonical; product of factor^exponent = p up to a rational constant
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

} // namespace mptri

#endif
