#include <doctest.h>

#include "helpers.hpp"

using namespace mptri;
using test::P;
using test::xy;
using test::xyz;

TEST_CASE("degree") {
    CHECK(P("x^2*y + y^3").degree(1) == 3);
    CHECK(P("0").degree(1) == -1);
    CHECK(P("x*z^2 - z*y + 1", xyz()).degree(2) == 2);
    CHECK(P("7").degree(0) == 0);
    CHECK_THROWS_AS(P("x").degree(5), MathError);
}

TEST_CASE("arithmetic basics") {
    Poly a = P("x + y");
    Poly b = P("x - y");
    CHECK(a * b == P("x^2 - y^2"));
    CHECK(a + b == P("2*x"));
    CHECK(a - a == P("0"));
    CHECK(P("x + 1").pow(2) == P("x^2 + 2*x + 1"));
    CHECK((P("0") * a).is_zero());
}

TEST_CASE("content and primitive part") {
    // coefficient gcds computed independently with integer gcds
    CHECK(content(P("8*y^3 - 6*y*x"), 1) == P("2"));
    CHECK(content(P("x*y + x"), 1) == P("x"));
    CHECK(content(P("2*y^4 - 3*y^2*x + x^2 - 2*x^3 + x^4"), 1) == P("1"));

    CHECK(primitive_part(P("8*y^3 - 6*y*x"), 1) == P("4*y^3 - 3*y*x"));
    CHECK(primitive_part(P("x*y + x"), 1) == P("y + 1"));
    Poly prim = P("3*y^2 + x");
    CHECK(primitive_part(prim, 1) == prim);

    CHECK_THROWS_AS(content(P("0"), 1), MathError);
    CHECK_THROWS_AS(primitive_part(P("0"), 1), MathError);

    // content * primitive_part reproduces the input exactly
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        Poly p = test::random_poly(rng, xy(), 4, 5);
        Poly c = content(p, 1);
        CHECK(c * primitive_part(p, 1) == p);
        CHECK(content(primitive_part(p, 1), 1).is_one());
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2 - 1"), P("x^2 - 2*x + 1")) == P("x - 1"));
    CHECK(gcd(P("6*x"), P("4*x^2")) == P("2*x"));
    // oracle: the reported gcd divides both inputs and contains 2 and x
    CHECK(divides(P("2*x"), P("6*x")));
    CHECK(divides(P("2*x"), P("4*x^2")));
    // the paper's Example pair is coprime
    Poly f1 = P("x^2 + y^2 + z^3 - 1", xyz());
    Poly f2 = P("x*z^2 - z*y + 1", xyz());
    CHECK(gcd(f1, f2).is_constant());
    CHECK(gcd(P("0"), P("-3*x")) == P("3*x"));
    CHECK_THROWS_AS(gcd(P("0"), P("0")), MathError);
}

TEST_CASE("gcd properties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Poly p = test::random_poly(rng, xy(), 3, 3);
        Poly q = test::random_poly(rng, xy(), 3, 3);
        Poly r = test::random_poly(rng, xy(), 3, 3);
        Poly g1 = gcd(p, gcd(q, r));
        Poly g2 = gcd(gcd(p, q), r);
        CHECK(g1 == g2);
        // gcd divides both arguments
        Poly g = gcd(p, q);
        CHECK(divides(g, p));
        CHECK(divides(g, q));
        // common factors are found
        Poly h = test::random_poly(rng, xy(), 2, 2);
        CHECK(divides(h.canonical(), gcd(p * h, q * h)));
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        Poly p = test::random_poly(rng, xyz(), 3, 4);
        Poly c = p.canonical();
        CHECK(c == c.canonical());
        CHECK(c.is_canonical());
    }
}

TEST_CASE("divide_exact") {
    CHECK(divide_exact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    CHECK_THROWS_AS(divide_exact(P("x^2*y"), P("y^2")), NonExactDivision);
    // quotient from the worked pseudo-division identity
    Poly r = P("8*x") * P("-3*y^2 + 2*x - 4*x^2 + 2*x^3");
    CHECK(divide_exact(r, P("8*x")) == P("-3*y^2 + 2*x - 4*x^2 + 2*x^3"));
    CHECK_THROWS_AS(divide_exact(P("x"), P("0")), MathError);
}

TEST_CASE("extended pseudo-division golden identities") {
    // trivariate step of the worked example, main variable z
    Poly f = P("x^2 + y^2 + z^3 - 1", xyz());
    Poly g = P("x*z^2 - z*y + 1", xyz());
    auto pd = pseudo_divide_extended(f, g, 2);
    CHECK(pd.multiplier == P("x^2", xyz()));
    CHECK(pd.delta == 1);
    CHECK(pd.remainder == P("x^4 + x^2*y^2 - x^2 - x*z - y + y^2*z", xyz()));
    // quotient of shape +-(x*z + y)
    CHECK((pd.quotient == P("-x*z - y", xyz()) || pd.quotient == P("x*z + y", xyz())));
    CHECK(pd.multiplier * f + pd.quotient * g == pd.remainder);

    // bivariate step: 16 f - 8 y g = 8x(-3y^2 + 2x - 4x^2 + 2x^3)
    Poly fb = P("2*y^4 - 3*y^2*x + x^2 - 2*x^3 + x^4");
    Poly gb = P("4*y^3 - 3*y*x");
    auto pdb = pseudo_divide_extended(fb, gb, 1);
    CHECK(pdb.multiplier == P("16"));
    CHECK(pdb.remainder == P("8*x") * P("-3*y^2 + 2*x - 4*x^2 + 2*x^3"));
    CHECK(pdb.multiplier * fb + pdb.quotient * gb == pdb.remainder);

    // f = g: single elimination step with zero remainder
    auto pdeq = pseudo_divide_extended(gb, gb, 1);
    CHECK(pdeq.delta == 0);
    CHECK(pdeq.remainder.is_zero());
    CHECK(pdeq.multiplier * gb + pdeq.quotient * gb == pdeq.remainder);

    CHECK_THROWS_AS(pseudo_divide_extended(fb, P("0"), 1), MathError);
    CHECK_THROWS_AS(pseudo_divide_extended(P("x"), P("x^2"), 1), MathError);
    CHECK_THROWS_AS(pseudo_divide_extended(P("3"), P("2"), 1), MathError);
}

TEST_CASE("pseudo-division identity and divisibility laws") {
    std::mt19937_64 rng(17);
    int cases = 0;
    while (cases < 120) {
        const auto& order = (cases % 2 == 0) ? xy() : xyz();
        std::size_t var = order->size() - 1;
        Poly f = test::random_poly(rng, order, 4, 4);
        Poly g = test::random_poly(rng, order, 3, 3);
        if (f.degree(var) < g.degree(var)) std::swap(f, g);
        if (g.degree(var) < 0 || f.degree(var) < g.degree(var)) continue;
        if (f.degree(var) <= 0 && g.degree(var) <= 0) continue;
        auto pd = pseudo_divide_extended(f, g, var);
        CHECK(pd.multiplier * f + pd.quotient * g == pd.remainder);
        CHECK(pd.remainder.degree(var) < g.degree(var));
        // shape: every positive-degree coefficient of q is divisible by lc(g)
        if (pd.delta >= 1 && !pd.quotient.is_zero()) {
            Poly l = g.leading_coefficient(var);
            for (int k = 1; k <= pd.quotient.degree(var); ++k) {
                Poly c = pd.quotient.coefficient(var, static_cast<std::uint32_t>(k));
                if (!c.is_zero()) CHECK(divides(l, c));
            }
        }
        ++cases;
    }

    // seeded contents: r1 | q, r2^delta | q, r1 | r, r2^(delta+1) | r
    int seeded = 0;
    while (seeded < 60) {
        Poly r1 = test::random_poly(rng, xy(), 1, 2, 5);
        Poly r2 = test::random_poly(rng, xy(), 1, 2, 5);
        if (r1.depends_on(1) || r2.depends_on(1)) continue;
        if (r1.is_zero() || r2.is_zero()) continue;
        Poly f = r1 * test::random_poly(rng, xy(), 3, 3);
        Poly g = r2 * test::random_poly(rng, xy(), 2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        if (f.degree(1) < 1 || g.degree(1) < 1) continue;
        if (f.degree(1) < g.degree(1)) continue;
        auto pd = pseudo_divide_extended(f, g, 1);
        unsigned delta = static_cast<unsigned>(pd.delta);
        CHECK(divides(r1, pd.quotient));
        CHECK(divides(r2.pow(delta), pd.quotient));
        CHECK(divides(r1, pd.remainder));
        CHECK(divides(r2.pow(delta + 1), pd.remainder));
        ++seeded;
    }
}

TEST_CASE("squarefree decomposition") {
    Poly p = P("x^2 - 2*x + 1") * P("y + 1") * P("y + 1") * P("y + 1") * P("x + y");
    auto layers = squarefree_decomposition(p);
    Poly reassembled(xy(), 1);
    for (const auto& [f, e] : layers) {
        CHECK(gcd(f, f.derivative(0).is_zero() ? f.derivative(1) : f.derivative(0))
                  .is_constant());
        reassembled *= f.pow(static_cast<unsigned>(e));
    }
    CHECK(reassembled.canonical() == p.canonical());
    bool saw_linear_sq = false, saw_cubic = false;
    for (const auto& [f, e] : layers) {
        if (e == 2 && f == P("x - 1")) saw_linear_sq = true;
        if (e == 3 && f == P("y + 1")) saw_cubic = true;
    }
    CHECK(saw_linear_sq);
    CHECK(saw_cubic);
}

TEST_CASE("printing round-trip") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        Poly p = test::random_poly(rng, xyz(), 4, 5, 1000, false);
        CHECK(parse_poly(p.to_string(), xyz()) == p);
    }
    CHECK(P("0").to_string() == "0");
}
