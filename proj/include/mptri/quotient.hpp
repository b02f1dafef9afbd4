#ifndef MPTRI_QUOTIENT_HPP
#define MPTRI_QUOTIENT_HPP

#include <functional>
#include <vector>

#include "mptri/qx.hpp"

namespace mptri {

// Element of (Q[x]/(m))[y]: coefficients reduced modulo the current modulus.
struct YQ {
    std::vector<QX> c; // c[i] multiplies y^i

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

// Thrown by quotient-ring operations when a leading coefficient is a zero
// divisor: the modulus must be split into `factor` and its cofactor and the
// computation re-run on each branch (regularity splitting).
struct SplitRequest {
    QX factor; // proper monic factor of the current modulus
};

YQ yq_reduce(const YQ& a, const QX& m);
YQ yq_from_poly(const Poly& p, std::size_t var_x, std::size_t var_y, const QX& m);
// lift to an integer polynomial, denominators cleared, canonical form
Poly yq_to_poly(const YQ& a, const VarOrderPtr& order, std::size_t var_x, std::size_t var_y);

YQ yq_add(const YQ& a, const YQ& b, const QX& m);
YQ yq_sub(const YQ& a, const YQ& b, const QX& m);
YQ yq_mul(const YQ& a, const YQ& b, const QX& m);
YQ yq_scale(const YQ& a, const QX& s, const QX& m);
YQ yq_derivative(const YQ& a, const QX& m);
bool yq_eq(const YQ& a, const YQ& b);

// inverse of a coefficient modulo m; throws SplitRequest on a zero divisor
QX qx_inverse_mod(const QX& a, const QX& m);

// remainder of a by b (b's leading coefficient must be invertible;
// may throw SplitRequest)
YQ yq_mod(const YQ& a, const YQ& b, const QX& m);
YQ yq_divide_exact(const YQ& a, const YQ& b, const QX& m);
YQ yq_monic(const YQ& a, const QX& m);
// monic gcd over the quotient ring (may throw SplitRequest)
YQ yq_gcd(const YQ& a, const YQ& b, const QX& m);

// Runs `body` over the modulus, splitting it into coprime factors whenever a
// SplitRequest escapes; collects one result per final branch.
template <typename T>
void for_each_branch(const QX& modulus, const std::function<T(const QX&)>& body,
                     std::vector<std::pair<QX, T>>& out) {
    try {
        out.emplace_back(modulus, body(modulus));
    } catch (const SplitRequest& s) {
        QX a = s.factor;
        QX b = qx_div(modulus, a);
        for_each_branch(a, body, out);
        for_each_branch(b, body, out);
    }
}

// squarefree decomposition of a in y over Q[x]/(m) with regularity splitting:
// per coprime modulus piece, a list of (monic squarefree factor, exponent);
// constants-in-y are dropped.  a must not vanish identically modulo any piece.
struct YSquarefreePart {
    YQ factor;
    int exponent;
};
std::vector<std::pair<QX, std::vector<YSquarefreePart>>> yq_squarefree_split(const YQ& a,
                                                                             const QX& m);

} // namespace mptri

#endif
