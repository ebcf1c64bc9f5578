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
#include "layerpoly/particular.hpp"

#include <doctest.h>

using namespace layerpoly;
using namespace layerpoly::testing;

TEST_CASE("y-integrated particular solution, planar monomial") {
    CHECK(inv_laplacian_monomial(MultiIndex{4}, 3) == P1("1/20*x^4*y^5 - 1/70*x^2*y^7 + 1/2520*y^9"));
    CHECK(inv_laplacian_monomial(MultiIndex{0}, 0) == P1("1/2*y^2"));
    CHECK_THROWS_AS(inv_laplacian_monomial(MultiIndex{1}, -1), DomainError);
}

TEST_CASE("y-integrated particular solution, three dimensions") {
    const Vars v3{3, false};
    CHECK(inv_laplacian_monomial(MultiIndex{3, 2, 1}, 3) ==
          P("1/20*x1^3*x2^2*x3*y^5 - 1/420*x1^3*x3*y^7 - 1/140*x1*x2^2*x3*y^7 + 1/2520*x1*x3*y^9", v3));
}

TEST_CASE("x-integrated particular solution") {
    CHECK(inv_laplacian_monomial_alt(4, 3) == P1("1/30*x^6*y^3 - 1/280*x^8*y"));
    CHECK(inv_laplacian_monomial_alt(0, 0) == P1("1/2*x^2"));
    // Single j = 0 term 1!1!/3! x^3 y; Δ(x^3 y / 6) = x y.
    const Poly alt = inv_laplacian_monomial_alt(1, 1);
    CHECK(alt == P1("1/6*x^3*y"));
    CHECK(laplacian(alt, 1) == P1("x*y"));
    CHECK_THROWS_AS(inv_laplacian(P("x1*y", Vars{2, false}), 2, ParticularForm::IntegrateX), DomainError);
}

TEST_CASE("inv_laplacian on polynomials") {
    CHECK(inv_laplacian(P1("0"), 1).is_zero());
    CHECK(inv_laplacian(P1("x^4*y^3"), 1) == P1("1/20*x^4*y^5 - 1/70*x^2*y^7 + 1/2520*y^9"));
    const Poly u = inv_laplacian(P1("x^4*y^3 + 2"), 1);
    CHECK(u == P1("1/20*x^4*y^5 - 1/70*x^2*y^7 + 1/2520*y^9 + y^2"));
    CHECK(laplacian(u, 1) == P1("x^4*y^3 + 2"));

    // A width-layout right-hand side is fine as long as it does not use a.
    CHECK(inv_laplacian(P1a("x^4*y^3"), 1) == P1a("1/20*x^4*y^5 - 1/70*x^2*y^7 + 1/2520*y^9"));
    CHECK_THROWS_AS(inv_laplacian(P1a("a*y"), 1), DomainError);
    CHECK_THROWS_AS(inv_laplacian(P1("x"), 2), RingMismatch);
}

TEST_CASE("random monomials are inverted exactly") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> small(0, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(dim(rng));
        MultiIndex k(n);
        int budget = small(rng);
        std::uniform_int_distribution<std::size_t> slot(0, n - 1);
        while (budget-- > 0) ++k[slot(rng)];
        const int m = small(rng);
        const Poly u = inv_laplacian_monomial(k, m);
        const Vars v{n, false};
        MultiIndex target(v.nvars());
        for (std::size_t i = 0; i < n; ++i) target[i] = k[i];
        target[v.y()] = m;
        CHECK(laplacian(u, n) == Poly::monomial(target));
        CHECK(u.degree() == k.total() + m + 2);
        for (const auto& [e, c] : u.terms()) {
            for (std::size_t i = 0; i < n; ++i) CHECK(e[i] <= k[i]);
        }
    }
}

TEST_CASE("linearity and the planar alternative") {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Vars v{n, false};
        for (int trial = 0; trial < 40; ++trial) {
            const Poly p = random_poly(rng, v, 6, 4);
            const Poly q = random_poly(rng, v, 6, 4);
            const Rational alpha(2, 5);
            const Rational beta(-3);
            CHECK(inv_laplacian(p * alpha + q * beta, n) == inv_laplacian(p, n) * alpha + inv_laplacian(q, n) * beta);
            if (!p.is_zero()) CHECK(inv_laplacian(p, n).degree() == p.degree() + 2);
            if (n == 1) {
                const Poly alt = inv_laplacian(p, 1, ParticularForm::IntegrateX);
                CHECK(laplacian(alt, 1) == p);
                CHECK(laplacian(alt - inv_laplacian(p, 1), 1).is_zero());
            }
        }
    }
}
