#include <catch2/catch_amalgamated.hpp>

#include "gitstab/parse.hpp"
#include "gitstab/poly.hpp"
#include "testutil.hpp"

using namespace gitstab;
using testutil::Rng;

TEST_CASE("poly invariants") {
    Poly f = parse_poly("x^2*y + 3*z^3", 3);
    CHECK(f.degree() == 3);
    CHECK(f.num_vars() == 3);
    CHECK(f.term_count() == 2);
    CHECK(f.coeff({2, 1, 0}) == 1);
    CHECK(f.coeff({0, 0, 3}) == 3);

    CHECK_THROWS_AS(Poly(3, Poly::TermMap{}), input_error);
    CHECK_THROWS_AS(Poly(3, Poly::TermMap{{{1, 0, 0}, Rat(1)}, {{2, 0, 0}, Rat(1)}}),
                    input_error);
    // zero coefficients are dropped, not stored
    Poly g(2, Poly::TermMap{{{1, 0}, Rat(1)}, {{0, 1}, Rat(0)}});
    CHECK(g.term_count() == 1);
}

TEST_CASE("parse grammar") {
    CHECK_THROWS_AS(parse_poly("0", 3), input_error);
    CHECK_THROWS_AS(parse_poly("x + 1", 3), input_error);       // inhomogeneous
    CHECK_THROWS_AS(parse_poly("x - x", 3), input_error);       // cancels to zero
    CHECK_THROWS_AS(parse_poly("q", 3), parse_error);           // bad variable
    CHECK_THROWS_AS(parse_poly("x^", 3), parse_error);          // missing exponent
    CHECK_THROWS_AS(parse_poly("(x", 3), parse_error);          // unbalanced
    CHECK_THROWS_AS(parse_poly("w", 3), parse_error);           // w needs 4 vars
    CHECK_NOTHROW(parse_poly("w", 4));

    // position is reported
    try {
        parse_poly("x*y + q", 3);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 6);
    }

    Poly f = parse_poly("(y^2 + x*z)^2 * y^5", 3);
    CHECK(f.degree() == 9);
    CHECK(f.term_count() == 3);
    CHECK(f.coeff({0, 9, 0}) == 1);
    CHECK(f.coeff({1, 7, 1}) == 2);
    CHECK(f.coeff({2, 5, 2}) == 1);

    // rational coefficients, x0..x9 names, unary minus
    Poly h = parse_poly("-1/2*x0^2 + 3/4*x1*x2", 3);
    CHECK(h.coeff({2, 0, 0}) == Rat(-1, 2));
    CHECK(h.coeff({0, 1, 1}) == Rat(3, 4));
}

TEST_CASE("render round-trips") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        int nvars = static_cast<int>(rng.range(2, 4));
        int d = static_cast<int>(rng.range(1, 4));
        Poly f = testutil::random_poly(rng, nvars, d);
        Poly back = parse_poly(render_poly(f), nvars);
        CHECK(back == f);
    }
    CHECK(render_poly(parse_poly("y^2*z - x^3", 3)) == "-x^3 + y^2*z");
}

TEST_CASE("ring axioms on sampled polynomials") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        int nvars = static_cast<int>(rng.range(2, 3));
        int d = static_cast<int>(rng.range(1, 3));
        Poly f = testutil::random_poly(rng, nvars, d);
        Poly g = testutil::random_poly(rng, nvars, d);
        Poly h = testutil::random_poly(rng, nvars, d + 1);
        auto fg = Poly::add(f, g);
        if (!fg) continue;
        CHECK(*fg * h == *Poly::add(f * h, g * h));
        CHECK(f * g == g * f);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        Poly f = testutil::random_poly(rng, 3, 2);
        Poly g = testutil::random_poly(rng, 3, 3);
        std::vector<Rat> p{Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9), 2),
                           Rat(rng.range(-9, 9), 3)};
        CHECK((f * g).eval_rat(p) == f.eval_rat(p) * g.eval_rat(p));
    }
}
