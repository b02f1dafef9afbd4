#ifndef MPTRI_TEST_HELPERS_HPP
#define MPTRI_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "mptri/parse.hpp"
#include "mptri/poly.hpp"

namespace mptri::test {

inline VarOrderPtr xy() {
    static VarOrderPtr o = VarOrder::make({"x", "y"});
    return o;
}

inline VarOrderPtr xyz() {
    static VarOrderPtr o = VarOrder::make({"x", "y", "z"});
    return o;
}

inline Poly P(const char* text, const VarOrderPtr& order = xy()) {
    return parse_poly(text, order);
}

// sparse random polynomial: up to `terms` monomials, per-variable degree
// bounded by `deg`, coefficients in [-bound, bound]
inline Poly random_poly(std::mt19937_64& rng, const VarOrderPtr& order, int deg, int terms,
                        long bound = 20, bool nonzero = true) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::uniform_int_distribution<int> expo(0, deg);
    while (true) {
        std::vector<std::pair<Exponents, mpz_class>> ts;
        for (int t = 0; t < terms; ++t) {
            Exponents e(order->size(), 0);
            for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
            ts.emplace_back(std::move(e), mpz_class(coeff(rng)));
        }
        Poly p = Poly::from_terms(order, std::move(ts));
        if (!nonzero || !p.is_zero()) return p;
    }
}

} // namespace mptri::test

#endif
