#include <doctest.h>

#include "mptri/oracle.hpp"
#include "mptri/prs.hpp"

#include "helpers.hpp"

using namespace mptri;
using test::P;
using test::xy;
using test::xyz;

TEST_CASE("tracked sequence on the critical-point system") {
    Poly f1 = P("2*y^4 - 3*y^2*x + x^2 - 2*x^3 + x^4");
    Poly f2 = P("4*y^3 - 3*y*x");
    PrsSequence seq = prs_extended(f1, f2, 1);
    seq.verify();

    REQUIRE(seq.k() == 3);
    // p-parts {x, x(8x^2-16x-1), 1} up to unit
    CHECK(seq.steps[0].p.canonical() == P("x"));
    CHECK(seq.steps[1].p.canonical() == P("8*x^3 - 16*x^2 - x"));
    CHECK(seq.steps[2].p.is_constant());
    // last pair (2x(x-1)^2, y) up to unit normalization
    CHECK(seq.last_lower().canonical() == P("x^3 - 2*x^2 + x"));
    CHECK(seq.last_upper().canonical() == P("y"));
    // intermediate remainder as printed
    CHECK(seq.f(3).canonical() == P("3*y^2 - 2*x^3 + 4*x^2 - 2*x").canonical());
    // every w is an integer unit here
    for (const auto& s : seq.steps) CHECK(s.w.is_constant());
}

TEST_CASE("tracked sequence on the trivariate example") {
    Poly f1 = P("x^2 + y^2 + z^3 - 1", xyz());
    Poly f2 = P("x*z^2 - z*y + 1", xyz());
    PrsSequence seq = prs_extended(f1, f2, 2);
    seq.verify();

    REQUIRE(seq.k() == 2);
    CHECK(seq.steps[0].m == P("x^2", xyz()));
    CHECK(seq.f(3) == P("x^4 + x^2*y^2 - x^2 - x*z - y + y^2*z", xyz()));
    // m_2 = (y^2 - x)^2
    CHECK(seq.steps[1].m.canonical() == P("(y^2 - x)^2", xyz()).canonical());
    // f_4 as printed in the worked example
    Poly f4 = P("1 - 3*x^3*y - 3*x*y^3 + 3*x*y + x^2*y^3 + y^5 - y^3 + x^7 + 2*x^5*y^2 "
                "- 2*x^5 + x^3*y^4 - 2*x^3*y^2 + x^3",
                xyz());
    CHECK(seq.last_lower().canonical() == f4.canonical());
    CHECK(seq.steps[1].w.is_constant());
    CHECK(seq.steps[1].p.is_constant());
}

TEST_CASE("common factor is detected and carried") {
    Poly h = P("x*y + 1");
    Poly f1 = (P("y^2 + x") * h).canonical();
    Poly f2 = (P("y + 3*x") * h).canonical();
    REQUIRE(f1.degree(1) >= f2.degree(1));
    try {
        prs_extended(f1, f2, 1);
        FAIL("expected CommonFactor");
    } catch (const CommonFactor& e) {
        CHECK(divides(h.canonical(), e.common));
    }
}

TEST_CASE("non-primitive input is rejected") {
    CHECK_THROWS_AS(prs_extended(P("x*y^2 + x"), P("y"), 1), MathError);
}

TEST_CASE("step ledger on random systems") {
    std::mt19937_64 rng(31);
    int cases = 0;
    while (cases < 40) {
        Poly f1 = test::random_poly(rng, xy(), 4, 5);
        Poly f2 = test::random_poly(rng, xy(), 3, 4);
        if (f1.degree(1) < 1 || f2.degree(1) < 1) continue;
        if (f1.degree(1) < f2.degree(1)) std::swap(f1, f2);
        f1 = primitive_part(f1, 1);
        f2 = primitive_part(f2, 1);
        if (!gcd(f1, f2).is_constant()) continue;
        PrsSequence seq = prs_extended(f1, f2, 1);
        seq.verify(); // exact re-expansion of every step identity
        for (std::size_t i = 2; i < seq.chain.size(); ++i)
            CHECK(seq.chain[i].degree(1) < seq.chain[i - 1].degree(1));
        CHECK(seq.last_lower().degree(1) <= 0);
        ++cases;
    }
}

TEST_CASE("normalize_cor8") {
    Poly f1 = P("2*y^4 - 3*y^2*x + x^2 - 2*x^3 + x^4");
    Poly f2 = P("4*y^3 - 3*y*x");
    PrsSequence seq = prs_extended(f1, f2, 1);

    PrsSequence norm = normalize_cor8(seq);
    norm.verify();
    CHECK(norm.steps.back().g.is_one());
    CHECK(gcd(norm.steps.back().m, norm.last_lower()).is_constant());
    for (const auto& s : norm.steps) CHECK(s.w.is_constant());

    // idempotence
    PrsSequence again = normalize_cor8(norm);
    again.verify();
    for (std::size_t i = 0; i < norm.steps.size(); ++i) {
        CHECK(again.steps[i].m == norm.steps[i].m);
        CHECK(again.steps[i].q == norm.steps[i].q);
        CHECK(again.steps[i].g == norm.steps[i].g);
        CHECK(again.steps[i].f_next == norm.steps[i].f_next);
    }

    // seed a sequence with h = gcd(m_i, g_i) > 1 by scaling a step
    PrsSequence seeded = seq;
    Poly h = P("3*x^2 + 1");
    seeded.steps[0].m *= h;
    seeded.steps[0].q *= h;
    seeded.steps[0].g *= h;
    PrsSequence fixed = normalize_cor8(seeded);
    CHECK(fixed.steps[0].m == seq.steps[0].m);
    CHECK(fixed.steps[0].q == seq.steps[0].q);
    CHECK(fixed.steps[0].g == seq.steps[0].g);
    fixed.verify();
}

TEST_CASE("subresultant sequence matches the Sylvester determinant") {
    Poly f = P("2*y^4 - 3*y^2*x + x^2 - 2*x^3 + x^4");
    Poly fy = P("8*y^3 - 6*y*x");
    SubresultantSeq sub = subresultant_sequence(f, fy, 1);
    const Poly& last = sub.elements.back();
    REQUIRE(last.degree(1) <= 0);
    Poly res = sylvester_resultant(f, fy, 1);
    REQUIRE(!res.is_zero());
    CHECK(last.canonical() == res.canonical());

    // random regular cases, degrees <= 6
    std::mt19937_64 rng(37);
    int cases = 0;
    while (cases < 30) {
        Poly f1 = test::random_poly(rng, xy(), 5, 6);
        Poly f2 = test::random_poly(rng, xy(), 4, 5);
        if (f1.degree(1) < f2.degree(1)) std::swap(f1, f2);
        if (f2.degree(1) < 1) continue;
        if (!gcd(f1, f2).is_constant()) continue;
        SubresultantSeq s = subresultant_sequence(f1, f2, 1);
        if (s.elements.back().degree(1) > 0) continue;
        bool regular = true;
        for (std::size_t i = 2; i < s.elements.size(); ++i) {
            if (s.elements[i - 1].degree(1) - s.elements[i].degree(1) != 1) regular = false;
        }
        Poly det = sylvester_resultant(f1, f2, 1);
        if (regular && !det.is_zero())
            CHECK(s.elements.back().canonical() == det.canonical());
        for (std::size_t i = 2; i < s.elements.size(); ++i)
            CHECK(s.elements[i].degree(1) < s.elements[i - 1].degree(1));
        ++cases;
    }
}

TEST_CASE("subresultant sequence when f2 divides f1") {
    Poly f2 = P("y^2 + x");
    Poly f1 = f2 * P("y - x");
    SubresultantSeq s = subresultant_sequence(f1, f2, 1);
    // terminates on the zero pseudo-remainder; last stored element is f2
    CHECK(s.elements.back() == f2);
}

TEST_CASE("pairwise relation of the regular subresultant recurrence") {
    // l_{i+1}^2 F_i + Q_i F_{i+1} = l_i^2 F_{i+2} across regular gaps
    std::mt19937_64 rng(41);
    int cases = 0;
    while (cases < 20) {
        Poly f1 = test::random_poly(rng, xy(), 4, 6);
        Poly f2 = test::random_poly(rng, xy(), 3, 5);
        if (f1.degree(1) <= f2.degree(1)) continue;
        if (f2.degree(1) < 1) continue;
        if (!gcd(f1, f2).is_constant()) continue;
        SubresultantSeq s = subresultant_sequence(f1, f2, 1);
        // the head element is never rescaled, so the relation starts at i = 2
        for (std::size_t i = 1; i + 2 < s.elements.size(); ++i) {
            const Poly& Fi = s.elements[i];
            const Poly& Fi1 = s.elements[i + 1];
            const Poly& Fi2 = s.elements[i + 2];
            if (Fi.degree(1) - Fi1.degree(1) != 1) continue;
            if (Fi1.degree(1) - Fi2.degree(1) != 1) continue;
            if (s.elements[i - 1].degree(1) - Fi.degree(1) != 1) continue;
            Poly li = Fi.leading_coefficient(1);
            Poly li1 = Fi1.leading_coefficient(1);
            // the relation determines Q_i: the difference must be an exact
            // multiple of F_{i+1}
            Poly target = li.pow(2) * Fi2 - li1.pow(2) * Fi;
            if (target.is_zero()) continue;
            REQUIRE(target.degree(1) >= Fi1.degree(1));
            auto pd = pseudo_divide_extended(target, Fi1, 1);
            CHECK(pd.remainder.is_zero());
        }
        ++cases;
    }
}

TEST_CASE("primitivity certificate") {
    Poly g = P("3*x*y^2 + y + 1"); // primitive in y
    auto pd = pseudo_divide_extended(P("y^4 + x"), g, 1);
    REQUIRE(pd.delta >= 1);
    Poly l = g.leading_coefficient(1);
    Poly s = pd.quotient.coefficient(1, 0);
    if (primitivity_certificate(g, l, s)) CHECK(content(g, 1).is_constant());

    CHECK_FALSE(primitivity_certificate(P("x*y"), P("x"), P("x")));
    CHECK(primitivity_certificate(P("y"), P("x"), P("5")));

    // whenever the certificate fires, the divisor has unit content
    std::mt19937_64 rng(43);
    int seen = 0;
    while (seen < 25) {
        Poly gg = test::random_poly(rng, xy(), 3, 4);
        Poly ff = test::random_poly(rng, xy(), 4, 4);
        if (gg.degree(1) < 1 || ff.degree(1) <= gg.degree(1)) continue;
        auto pdd = pseudo_divide_extended(ff, gg, 1);
        if (pdd.delta < 1) continue;
        Poly ll = gg.leading_coefficient(1);
        Poly ss = pdd.quotient.coefficient(1, 0);
        if (primitivity_certificate(gg, ll, ss)) CHECK(content(gg, 1).is_constant());
        ++seen;
    }
    // and a seeded non-primitive divisor is never certified
    Poly bad = P("x + 1") * P("x*y^2 + y + 2");
    auto pdbad = pseudo_divide_extended(P("y^4 + 1") * P("x + 1"), bad, 1);
    REQUIRE(pdbad.delta >= 1);
    CHECK_FALSE(primitivity_certificate(bad, bad.leading_coefficient(1),
                                        pdbad.quotient.coefficient(1, 0)));
}
