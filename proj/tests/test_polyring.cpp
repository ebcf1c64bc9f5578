/*
   Copyright 2026 The layerpoly Authors

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

#include "test_support.hpp"

#include "layerpoly/error.hpp"

#include <doctest.h>

using namespace layerpoly;
using namespace layerpoly::testing;

TEST_CASE("rational normalises eagerly") {
    const Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.denominator() == "2");
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(binomial(6, 4) == Rational(15));
    CHECK(binomial(2, 4) == Rational(0));
}

TEST_CASE("add") {
    CHECK(P1("x^2 + y") + P1("-x^2") == P1("y"));
    CHECK(P1("3*x*y - 1") + Poly(2) == P1("3*x*y - 1"));
    CHECK(P1("1/3*y") + P1("1/6*y") == P1("1/2*y"));
    CHECK((P1("1/3*y") + P1("1/6*y")).coefficient(MultiIndex{0, 1}) == Rational(1, 2));
    CHECK_THROWS_AS(P1("x") + P("y", Vars{2, false}), RingMismatch);
}

TEST_CASE("mul") {
    CHECK(P1("x") * P1("x") == P1("x^2"));
    const Poly p = P1("2/3*x^3*y - y + 5");
    CHECK(p * P1("1") == p);
    CHECK(P1("x - y") * P1("x + y") == P1("x^2 - y^2"));
    CHECK(mul(P1("x"), P1("y")).degree() == 2);
    CHECK_THROWS_AS(mul(P1("x"), P1a("a")), RingMismatch);
}

TEST_CASE("no zero coefficients are stored") {
    Poly p = P1("x^2 + y");
    p.add_term(MultiIndex{2, 0}, Rational(-1));
    CHECK(p.size() == 1);
    CHECK((P1("x") - P1("x")).is_zero());
    CHECK((P1("x") * Rational(0)).is_zero());
}

TEST_CASE("diff") {
    const Vars v{1, false};
    CHECK(diff(P1("y^3"), v.y()) == P1("3*y^2"));
    CHECK(diff(P1("x^4*y"), v.x(0), 2) == P1("12*x^2*y"));
    CHECK(diff(P1("y^2"), v.x(0)).is_zero());
    CHECK(diff(P1("7"), v.y(), 3).is_zero());
    CHECK(diff(P1("x^2"), v.x(0), 0) == P1("x^2"));
    CHECK(diff(P1a("y*a^-1"), 2) == P1a("-y*a^-2"));
}

TEST_CASE("laplacian") {
    CHECK(laplacian(P1("1/20*x^4*y^5 - 1/70*x^2*y^7 + 1/2520*y^9"), 1) == P1("x^4*y^3"));
    CHECK(laplacian(P1("x^2 - y^2"), 1).is_zero());
    const Vars v3{3, false};
    const Poly u = P("1/20*x1^3*x2^2*x3*y^5 - 1/420*x1^3*x3*y^7 - 1/140*x1*x2^2*x3*y^7 + 1/2520*x1*x3*y^9", v3);
    CHECK(laplacian(u, 3) == P("x1^3*x2^2*x3*y^3", v3));
    // The width symbol is never differentiated.
    CHECK(laplacian(P1a("a^3*y^2"), 1) == P1a("2*a^3"));
    CHECK_THROWS_AS(laplacian(P1("x"), 2), DomainError);
}

TEST_CASE("substitute") {
    const Vars va{1, true};
    const Poly a = Poly::variable(va.nvars(), va.a());
    CHECK(substitute(P1a("y*a^-1"), va.y(), a) == P1a("1"));

    const Vars v{1, false};
    const Poly u = P1("x^2 - y^2 + y");
    CHECK(substitute(u, v.y(), P1("0")) == P1("x^2"));
    CHECK(substitute(u, v.y(), P1("1")) == P1("x^2"));
    CHECK(substitute(P1("x*y^2"), v.y(), P1("x + 1")) == P1("x^3 + 2*x^2 + x"));
    CHECK_THROWS_AS(substitute(P1a("a^-1"), va.a(), P1a("a + 1")), DomainError);
    CHECK(substitute(P1a("y*a^-2"), va.a(), P1a("2")) == P1a("1/4*y"));
}

TEST_CASE("eval") {
    const Rational pt[] = {Rational(2), Rational(3)};
    CHECK(eval(P1("x^2 + y"), pt) == Rational(7));
    CHECK(eval(P1("0"), pt) == Rational(0));

    // f_2 = -y (y^2 - a^2) / (3a) with a = 1 at y = 1/2 is 1/8.
    const Poly f2 = Pya("-y*(y^2 - a^2)*a^-1/3");
    const Rational at[] = {Rational(1, 2), Rational(1)};
    CHECK(eval(f2, at) == Rational(1, 8));
    const Rational short_pt[] = {Rational(1)};
    CHECK_THROWS_AS(eval(P1("x"), short_pt), RingMismatch);
}

TEST_CASE("canonical text form") {
    const Vars v{1, false};
    const Poly u = P1("1/2520*y^9 - 1/70*x^2*y^7 + 1/20*x^4*y^5");
    CHECK(to_text(u, v) == "1/20*x1^4*y^5 - 1/70*x1^2*y^7 + 1/2520*y^9");
    CHECK(to_text(P1("-y + 1"), v) == "-y + 1");
    CHECK(to_text(P1("0"), v) == "0");
    CHECK(to_text(Pya("y*a^-1"), Vars{0, true}) == "y*a^-1");
    CHECK(to_latex(u, v) == "\\frac{1}{20} x^{4} y^{5} - \\frac{1}{70} x^{2} y^{7} + \\frac{1}{2520} y^{9}");
    CHECK(to_latex(P("x1*x2 - 3", Vars{2, false}), Vars{2, false}) == "x_{1} x_{2} - 3");
}

TEST_CASE("JSON term list") {
    const Vars v{1, true};
    const Poly p = P1a("1/5*y^5*a^-1 - 2/3*y^3*a + 7");
    const auto j = to_json(p, v);
    CHECK(j.at("nvars") == 3);
    CHECK(j.at("terms").size() == 3);
    CHECK(j.at("terms")[0].at("coeff") == "1/5");
    CHECK(j.at("terms")[0].at("exp") == nlohmann::json::array({0, 5, -1}));
    CHECK(poly_from_json(j) == p);
    CHECK_THROWS(poly_from_json(nlohmann::json::parse(R"({"nvars":2,"terms":[{"exp":[1],"coeff":"1"}]})")));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Vars v{n, false};
        for (int trial = 0; trial < 40; ++trial) {
            const Poly p = random_poly(rng, v, 4, 4);
            const Poly q = random_poly(rng, v, 4, 4);
            const Poly r = random_poly(rng, v, 4, 4);
            const Poly zero(v.nvars());
            const Poly one = Poly::constant(v.nvars(), Rational(1));
            CHECK((p + q) + r == p + (q + r));
            CHECK((p * q) * r == p * (q * r));
            CHECK(p + q == q + p);
            CHECK(p * q == q * p);
            CHECK(p * (q + r) == p * q + p * r);
            CHECK(p + zero == p);
            CHECK(p * one == p);
            CHECK((p - p).is_zero());
        }
    }
}

TEST_CASE("calculus properties on random polynomials") {
    std::mt19937_64 rng(11);
    const Vars v{2, true};
    for (int trial = 0; trial < 60; ++trial) {
        const Vars plain{2, false};
        const Poly p = change_layout(random_poly(rng, plain, 6, 5), plain, v) * P("a^2 + y", v);
        const Poly q = change_layout(random_poly(rng, plain, 6, 5), plain, v);
        CHECK(diff(diff(p, v.x(0)), v.y()) == diff(diff(p, v.y()), v.x(0)));
        const Rational alpha(-3, 7);
        const Rational beta(5, 2);
        CHECK(laplacian(p * alpha + q * beta, 2) == laplacian(p, 2) * alpha + laplacian(q, 2) * beta);
        const Poly reflect = P("a - y", v);
        CHECK(substitute(substitute(p, v.y(), reflect), v.y(), reflect) == p);
    }
}

TEST_CASE("serialise, parse, serialise is a fixed point") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Vars v{n, false};
        for (int trial = 0; trial < 50; ++trial) {
            const Poly p = random_poly(rng, v, 7, 6);
            const std::string text = to_text(p, v);
            CHECK(parse_poly(text, v) == p);
            CHECK(to_text(parse_poly(text, v), v) == text);
        }
    }
    const Vars va{0, true};
    const Poly f = Pya("1/9*y^9*a^-1 - 4/3*y^7*a + 127/15*y*a^7");
    CHECK(parse_poly(to_text(f, va), va) == f);
}
