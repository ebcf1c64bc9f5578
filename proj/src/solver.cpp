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

#include "layerpoly/solver.hpp"

#include "layerpoly/dirichlet.hpp"
#include "layerpoly/error.hpp"
#include "layerpoly/mixed.hpp"

#include <string>

namespace layerpoly {

namespace {

Poly at_y(const Poly& p, const Vars& vars, const Rational& value) {
    return substitute(p, vars.y(), Poly::constant(vars.nvars(), value));
}

void require_ring(const Poly& p, const Vars& vars, const char* what) {
    if (p.nvars() != vars.nvars()) {
        throw RingMismatch(std::string(what) + " is not in the ring of dimension " + std::to_string(vars.dim));
    }
}

MultiIndex spatial_part(const MultiIndex& e, const Vars& vars) {
    MultiIndex k(vars.dim);
    for (std::size_t i = 0; i < vars.dim; ++i) k[i] = e[vars.x(i)];
    return k;
}

// Σ coeff · basis(k) over the monomials coeff · x^k of `data`.
template <typename Basis>
Poly expand_in_basis(const Poly& data, const Vars& vars, Basis basis) {
    Poly out(vars.nvars());
    for (const auto& [e, c] : data.terms()) out += basis(spatial_part(e, vars)) * c;
    return out;
}

} // namespace

void LayerProblem::validate() const {
    if (n == 0) throw DomainError("spatial dimension must be at least 1");
    if (width.sign() <= 0) throw DomainError("layer width must be positive, got " + width.to_string());
    const Vars v = vars();
    require_ring(rhs, v, "right-hand side");
    require_ring(lower, v, "lower boundary data");
    require_ring(upper, v, "upper boundary data");
    for (const Poly* p : {&rhs, &lower, &upper}) {
        for (const auto& [e, c] : p->terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0) throw DomainError("negative exponent in problem data");
            }
        }
    }
    if (lower.degree_in(v.y()) > 0) throw DomainError("lower boundary data depends on y");
    if (upper.degree_in(v.y()) > 0) throw DomainError("upper boundary data depends on y");
}

SolutionReport verify(const Poly& u, const LayerProblem& problem) {
    problem.validate();
    const Vars vars = problem.vars();
    require_ring(u, vars, "candidate solution");

    SolutionReport report;
    report.u = u;
    report.residual_pde = laplacian(u, problem.n) - problem.rhs;
    report.residual_lower = at_y(u, vars, Rational(0)) - problem.lower;
    const Poly top = problem.kind == BoundaryKind::Dirichlet ? u : diff(u, vars.y());
    report.residual_upper = at_y(top, vars, problem.width) - problem.upper;
    report.verified =
        report.residual_pde.is_zero() && report.residual_lower.is_zero() && report.residual_upper.is_zero();
    return report;
}

SolutionReport solve(const LayerProblem& problem, ParticularForm form) {
    problem.validate();
    const Vars vars = problem.vars();
    const std::size_t n = problem.n;
    const Width width = Width::value(problem.width);

    const Poly particular = inv_laplacian(problem.rhs, n, form);
    const Poly lower = problem.lower - at_y(particular, vars, Rational(0));

    Poly u = particular;
    if (problem.kind == BoundaryKind::Dirichlet) {
        const Poly upper = problem.upper - at_y(particular, vars, problem.width);
        u += expand_in_basis(lower, vars, [&](const MultiIndex& k) { return basis_v(k, n, width); });
        u += expand_in_basis(upper, vars, [&](const MultiIndex& k) { return basis_u(k, n, width); });
    } else {
        const Poly upper = problem.upper - at_y(diff(particular, vars.y()), vars, problem.width);
        u += expand_in_basis(lower, vars, [&](const MultiIndex& k) { return mixed_basis_u(k, n, width); });
        u += expand_in_basis(upper, vars, [&](const MultiIndex& l) { return mixed_basis_v(l, n, width); });
    }
    return verify(u, problem);
}

std::pair<Poly, Poly> rectangle_trace(const Poly& u, const Rational& b0, const Rational& b1) {
    const Vars vars{1, false};
    if (u.nvars() != vars.nvars()) throw DomainError("rectangle traces are defined for n = 1 only");
    const auto at_x = [&](const Rational& b) {
        return substitute(u, vars.x(0), Poly::constant(vars.nvars(), b));
    };
    return {at_x(b0), at_x(b1)};
}

} // namespace layerpoly
