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
#include "worked_examples.hpp"

#include "layerpoly/error.hpp"

#include <doctest.h>

using namespace layerpoly;
using namespace layerpoly::testing;

namespace {

LayerProblem make_problem(std::size_t n, Rational a, BoundaryKind kind, const std::string& rhs,
                          const std::string& lower, const std::string& upper) {
    LayerProblem p;
    p.n = n;
    p.width = a;
    p.kind = kind;
    const Vars v = p.vars();
    p.rhs = P(rhs, v);
    p.lower = P(lower, v);
    p.upper = P(upper, v);
    return p;
}

Poly reflect_y(const Poly& p, const LayerProblem& problem) {
    const Vars v = problem.vars();
    return substitute(p, v.y(), Poly::constant(v.nvars(), problem.width) - Poly::variable(v.nvars(), v.y()));
}

} // namespace

TEST_CASE("Example 1: planar Dirichlet problem") {
    const auto problem = make_problem(1, Rational(1), BoundaryKind::Dirichlet, worked::kExample1Rhs,
                                      worked::kExample1Data, worked::kExample1Data);
    const Vars v = problem.vars();
    const Poly particular = inv_laplacian(problem.rhs, 1);
    CHECK(particular == P1(worked::kExample1Particular));
    CHECK(problem.upper - substitute(particular, v.y(), P1("1")) == P1(worked::kExample1UpperCorrected));

    const SolutionReport r = solve(problem);
    CHECK(r.verified);
    CHECK(r.u == P1(worked::kExample1Solution));
    CHECK(verify(P1(worked::kExample1Solution), problem).verified);

    // Read literally, the misprinted y^9 coefficient fails the Laplacian check.
    const SolutionReport bad = verify(P1(worked::kExample1SolutionMisprint), problem);
    CHECK_FALSE(bad.verified);
    CHECK_FALSE(bad.residual_pde.is_zero());
}

TEST_CASE("Example 2: three-dimensional Dirichlet problem") {
    const auto problem = make_problem(3, Rational(1), BoundaryKind::Dirichlet, worked::kExample23Rhs, "0", "0");
    const Vars v = problem.vars();
    const Poly particular = inv_laplacian(problem.rhs, 3);
    CHECK(particular == P(worked::kExample23Particular, v));
    CHECK(-substitute(particular, v.y(), P("1", v)) == P(worked::kExample2UpperCorrected, v));
    const SolutionReport r = solve(problem);
    CHECK(r.verified);
    CHECK(r.u == P(worked::kExample2Solution, v));
    CHECK(r.u.size() == 12);
}

TEST_CASE("Example 3: three-dimensional mixed problem") {
    const auto problem =
        make_problem(3, Rational(1), BoundaryKind::DirichletNeumann, worked::kExample23Rhs, "0", "0");
    const Vars v = problem.vars();
    const Poly particular = inv_laplacian(problem.rhs, 3);
    CHECK(-substitute(diff(particular, v.y()), v.y(), P("1", v)) == P(worked::kExample3UpperCorrected, v));
    const SolutionReport r = solve(problem);
    CHECK(r.verified);
    CHECK(r.u == P(worked::kExample3Solution, v));
}

TEST_CASE("trivial problem has the zero solution") {
    for (const auto kind : {BoundaryKind::Dirichlet, BoundaryKind::DirichletNeumann}) {
        const SolutionReport r = solve(make_problem(2, Rational(3), kind, "0", "0", "0"));
        CHECK(r.verified);
        CHECK(r.u.is_zero());
    }
}

TEST_CASE("verify") {
    const auto strip = make_problem(1, Rational(1), BoundaryKind::Dirichlet, "0", "x^2", "x^2");
    CHECK(verify(P1("x^2 - y^2 + y"), strip).verified);
    CHECK(solve(strip).u == P1("x^2 - y^2 + y"));

    // u + y(y - a) keeps both traces but breaks the equation by 2.
    const auto ex1 = make_problem(1, Rational(1), BoundaryKind::Dirichlet, worked::kExample1Rhs,
                                  worked::kExample1Data, worked::kExample1Data);
    const SolutionReport r = verify(solve(ex1).u + P1("y*(y - 1)"), ex1);
    CHECK_FALSE(r.verified);
    CHECK(r.residual_pde == P1("2"));
    CHECK(r.residual_lower.is_zero());
    CHECK(r.residual_upper.is_zero());

    CHECK_THROWS_AS(verify(P("x1", Vars{2, false}), ex1), RingMismatch);
}

TEST_CASE("problem validation") {
    auto p = make_problem(1, Rational(1), BoundaryKind::Dirichlet, "x", "1", "2");
    p.width = Rational(0);
    CHECK_THROWS_AS(solve(p), DomainError);
    p.width = Rational(-1, 2);
    CHECK_THROWS_AS(solve(p), DomainError);
    p = make_problem(1, Rational(1), BoundaryKind::Dirichlet, "x", "y", "0");
    CHECK_THROWS_AS(solve(p), DomainError);
    p = make_problem(1, Rational(1), BoundaryKind::Dirichlet, "x", "0", "x*y");
    CHECK_THROWS_AS(solve(p), DomainError);
    p = make_problem(1, Rational(1), BoundaryKind::Dirichlet, "x", "0", "0");
    p.rhs = P("x1", Vars{2, false});
    CHECK_THROWS_AS(solve(p), RingMismatch);
}

TEST_CASE("rectangle traces") {
    const auto [left, right] = rectangle_trace(P1("x^2 - y^2 + y"), Rational(0), Rational(1));
    CHECK(left == P1("-y^2 + y"));
    CHECK(right == P1("1 - y^2 + y"));
    const auto [z0, z1] = rectangle_trace(P1("0"), Rational(-3), Rational(5, 2));
    CHECK(z0.is_zero());
    CHECK(z1.is_zero());
    const auto [s0, s1] = rectangle_trace(P1("x*y"), Rational(0), Rational(2));
    CHECK(s0.is_zero());
    CHECK(s1 == P1("2*y"));
    CHECK_THROWS_AS(rectangle_trace(P("x1*y", Vars{2, false}), Rational(0), Rational(1)), DomainError);
}

TEST_CASE("solve matches the undetermined-coefficient oracle") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = trial % 3 == 2 ? 2 : 1;
        const auto kind = trial % 2 == 0 ? BoundaryKind::Dirichlet : BoundaryKind::DirichletNeumann;
        const LayerProblem p = random_problem(rng, n, n == 1 ? 4 : 2, n == 1 ? 5 : 3, kind);
        const SolutionReport r = solve(p);
        REQUIRE(r.verified);
        const int degree = std::max({p.rhs.degree() + 2, p.lower.degree() + 1, p.upper.degree() + 1, 0});
        const auto oracle = brute_force_solve(p, degree);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == r.u);
    }
}

TEST_CASE("structural properties of solve") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const auto kind = trial % 2 == 0 ? BoundaryKind::Dirichlet : BoundaryKind::DirichletNeumann;
        const LayerProblem p = random_problem(rng, n, 5, 6, kind);
        LayerProblem q = random_problem(rng, n, 5, 6, kind);
        q.width = p.width;
        const Vars v = p.vars();
        const Poly zero(v.nvars());

        const SolutionReport rp = solve(p);
        CHECK(rp.verified);

        // Linearity in (rhs, lower, upper).
        const Rational alpha(3, 4);
        const Rational beta(-2);
        LayerProblem mix = p;
        mix.rhs = p.rhs * alpha + q.rhs * beta;
        mix.lower = p.lower * alpha + q.lower * beta;
        mix.upper = p.upper * alpha + q.upper * beta;
        CHECK(solve(mix).u == rp.u * alpha + solve(q).u * beta);

        // Superposition of the three data sources.
        LayerProblem only_rhs = p;
        only_rhs.lower = zero;
        only_rhs.upper = zero;
        LayerProblem only_lower = p;
        only_lower.rhs = zero;
        only_lower.upper = zero;
        LayerProblem only_upper = p;
        only_upper.rhs = zero;
        only_upper.lower = zero;
        CHECK(rp.u == solve(only_rhs).u + solve(only_lower).u + solve(only_upper).u);

        if (kind == BoundaryKind::Dirichlet) {
            LayerProblem mirrored = p;
            mirrored.rhs = reflect_y(p.rhs, p);
            mirrored.lower = p.upper;
            mirrored.upper = p.lower;
            CHECK(solve(mirrored).u == reflect_y(rp.u, p));
        }
        if (n == 1) CHECK(solve(p, ParticularForm::IntegrateX).u == rp.u);
    }
}
