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

#pragma once

#include "layerpoly/particular.hpp"
#include "layerpoly/poly.hpp"

#include <utility>

namespace layerpoly {

enum class BoundaryKind {
    Dirichlet,         // u(x,0) = lower, u(x,a) = upper
    DirichletNeumann,  // u(x,0) = lower, u_y(x,a) = upper
};

/// Δu = rhs in {x ∈ R^n, 0 < y < width}. All polynomials live in
/// Vars{n, false}; the boundary data must not depend on y.
struct LayerProblem {
    std::size_t n = 1;
    Rational width{1};
    Poly rhs{2};
    BoundaryKind kind = BoundaryKind::Dirichlet;
    Poly lower{2};
    Poly upper{2};

    Vars vars() const { return Vars{n, false}; }

    /// Throws DomainError / RingMismatch when an invariant is violated.
    void validate() const;
};

struct SolutionReport {
    Poly u{2};
    Poly residual_pde{2};    // Δu - rhs
    Poly residual_lower{2};  // u(x,0) - lower
    Poly residual_upper{2};  // u(x,a) - upper, or u_y(x,a) - upper
    bool verified = false;   // all residuals are the zero polynomial
};

/// Exact residuals of a candidate solution.
SolutionReport verify(const Poly& u, const LayerProblem& problem);

/// The polynomial solution: particular solution plus the harmonic correction
/// assembled monomial by monomial from the boundary bases. The result is
/// certified by verify(); `verified == false` indicates an internal fault.
SolutionReport solve(const LayerProblem& problem, ParticularForm form = ParticularForm::IntegrateY);

/// Side traces u(b0, y), u(b1, y) of a planar (n = 1) solution on the lines
/// x = b0 and x = b1.
std::pair<Poly, Poly> rectangle_trace(const Poly& u, const Rational& b0, const Rational& b1);

} // namespace layerpoly
