/*
   Copyright 2026 The regula authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "test_util.hpp"

#include <doctest.h>

using namespace regula;
using namespace regula::test;

TEST_SUITE_BEGIN("rat_poly");

TEST_CASE("rationals are canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(2, -4).den() == 2);
    CHECK(Rat(0, 7).den() == 1);
    CHECK(Rat(3, 7) + Rat(4, 7) == Rat(1));
    CHECK(Rat(1, 3) * Rat(3, 1) == Rat(1));
    CHECK((Rat(1, 2) / Rat(1, 4)) == Rat(2));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(5) / Rat(0), std::domain_error);
    CHECK(Rat::from_string("-6/4") == Rat(-3, 2));
    CHECK(Rat::from_string("12345678901234567890123").str() == "12345678901234567890123");
}

TEST_CASE("poly arithmetic basics") {
    CHECK(pl("(s+1)*(s-1)") == pl("s^2-1"));
    CHECK(pl("(s+1)^3") == pl("s^3+3*s^2+3*s+1"));
    CHECK((pl("s^2+1") - pl("s^2+1")).is_zero());
    CHECK(pl("s+1").degree() == 1);
    CHECK(Poly().degree() == -1);
    CHECK(Poly({Rat(0)}).is_zero());
    CHECK(pl("s^2+2*s+3").eval(Rat(2)) == Rat(11));
}

TEST_CASE("poly divrem") {
    auto [q, r] = poly_divrem(pl("s^2+1"), pl("s"));
    CHECK(q == pl("s"));
    CHECK(r == pl("1"));
    CHECK_THROWS_AS(poly_divrem(pl("s"), Poly()), std::domain_error);

    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(rng, 8);
        const Poly b = random_poly(rng, 5, true);
        auto [qq, rr] = poly_divrem(a, b);
        CHECK(b * qq + rr == a);
        CHECK(rr.degree() < b.degree());
    }
}

TEST_CASE("poly gcd examples") {
    CHECK(poly_gcd(pl("(s+1)*(s-1)"), pl("(s+1)^2")) == pl("s+1"));
    CHECK(poly_gcd(pl("s"), pl("s^2+1")) == Poly::one());
    // three pairwise products sharing no overall root
    Poly g = poly_gcd(poly_gcd(pl("(s^2+1)*(s+1)"), pl("s*(s+1)")), pl("s*(s^2+1)*(s+2)"));
    CHECK(g == Poly::one());
    CHECK(poly_gcd(Poly(), pl("2*s+2")) == pl("s+1"));
}

TEST_CASE("poly gcd against constructed common factors") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const Poly g0 = random_poly(rng, 4, true);
        const Poly a = g0 * random_poly(rng, 5, true);
        const Poly b = g0 * random_poly(rng, 5, true);
        const Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(poly_divrem(g, g0.monic()).second.is_zero()); // g0 | g
        CHECK(poly_divrem(a, g).second.is_zero());
        CHECK(poly_divrem(b, g).second.is_zero());
    }
}

TEST_CASE("poly gcd handles large inputs (modular path)") {
    Rng rng(13);
    for (int i = 0; i < 5; ++i) {
        const Poly g0 = (random_poly(rng, 6, true) * random_poly(rng, 6, true)).monic();
        const Poly a = g0 * random_poly(rng, 10, true);
        const Poly b = g0 * random_poly(rng, 10, true);
        const Poly g = poly_gcd(a, b);
        CHECK(poly_divrem(g, poly_gcd(g0, a)).second.is_zero());
        CHECK(poly_divrem(a, g).second.is_zero());
        CHECK(poly_divrem(b, g).second.is_zero());
    }
}

TEST_CASE("extended gcd identity and degree bounds") {
    auto [g, u, v] = poly_gcd_ext(pl("s"), pl("s^2+1"));
    CHECK(g == Poly::one());
    CHECK(u * pl("s") + v * pl("s^2+1") == Poly::one());

    auto [g2, u2, v2] = poly_gcd_ext(pl("(s+1)*(s-1)"), pl("(s+1)^2"));
    CHECK(g2 == pl("s+1"));
    CHECK(u2 * pl("(s+1)*(s-1)") + v2 * pl("(s+1)^2") == g2);

    CHECK_THROWS_AS(poly_gcd_ext(Poly(), Poly()), std::domain_error);

    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        const Poly a = random_poly(rng, 6, true);
        const Poly b = random_poly(rng, 6, true);
        auto [gg, uu, vv] = poly_gcd_ext(a, b);
        CHECK(uu * a + vv * b == gg);
        CHECK(gg.is_monic());
        if (!a.is_constant() && !b.is_constant()) {
            CHECK(uu.degree() < b.degree() - gg.degree());
            CHECK(vv.degree() < a.degree() - gg.degree());
        }
    }
}

TEST_CASE("poly lcm") {
    CHECK(poly_lcm(pl("s+1"), pl("s+2")) == pl("(s+1)*(s+2)"));
    CHECK(poly_lcm(pl("(s+1)*s"), pl("s")) == pl("(s+1)*s"));
    Rng rng(19);
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_poly(rng, 5, true);
        const Poly b = random_poly(rng, 5, true);
        CHECK(poly_lcm(a, b) * poly_gcd(a, b) == (a * b).monic());
    }
}

TEST_SUITE_END();
