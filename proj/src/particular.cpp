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

#include "layerpoly/particular.hpp"

#include "layerpoly/error.hpp"

#include <string>

namespace layerpoly {

namespace {

// 1 / ((from+1)(from+2)...(to)), i.e. from!/to!.
Rational reciprocal_rising(int from, int to) {
    Rational r(1);
    for (int i = from + 1; i <= to; ++i) r /= Rational(i);
    return r;
}

} // namespace

Poly inv_laplacian_monomial(const MultiIndex& k, int m) {
    if (k.size() == 0) throw DomainError("particular solution needs at least one spatial variable");
    if (m < 0) throw DomainError("negative power of y");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0) throw DomainError("negative exponent in multi-index");
    }
    const Vars vars{k.size(), false};
    Poly lap_power = x_power(vars, k);  // Δ_x^j x^k, starting at j = 0
    Poly result(vars.nvars());
    MultiIndex y_shift(vars.nvars());
    for (int j = 0; !lap_power.is_zero(); ++j) {
        const int ypow = m + 2 * j + 2;
        Rational coeff = reciprocal_rising(m, ypow);
        if (j % 2 == 1) coeff = -coeff;
        y_shift[vars.y()] = ypow;
        result += lap_power * Poly::monomial(y_shift, coeff);
        // Δ_x only; lap_power has no y, so the y-second-derivative vanishes.
        lap_power = laplacian(lap_power, vars.dim);
    }
    return result;
}

Poly inv_laplacian_monomial_alt(int k, int m) {
    if (k < 0 || m < 0) throw DomainError("negative exponent");
    const Vars vars{1, false};
    Poly result(vars.nvars());
    const Rational mfact = factorial(static_cast<unsigned>(m));
    for (int j = 0; 2 * j <= m; ++j) {
        // k!/(k+2j+2)! · m!/(m-2j)!
        Rational coeff = reciprocal_rising(k, k + 2 * j + 2) * mfact / factorial(static_cast<unsigned>(m - 2 * j));
        if (j % 2 == 1) coeff = -coeff;
        result.add_term(MultiIndex{k + 2 * j + 2, m - 2 * j}, coeff);
    }
    return result;
}

Poly inv_laplacian(const Poly& rhs, std::size_t n, ParticularForm form) {
    const Vars plain{n, false};
    const Vars formal{n, true};
    if (n == 0) throw DomainError("spatial dimension must be at least 1");
    if (form == ParticularForm::IntegrateX && n != 1) {
        throw DomainError("x-integrated particular solution is defined for n = 1 only");
    }
    bool with_width = false;
    if (rhs.nvars() == formal.nvars()) {
        if (rhs.degree_in(formal.a()) > 0 || rhs.min_degree_in(formal.a()) < 0) {
            throw DomainError("right-hand side involves the formal width symbol a");
        }
        with_width = true;
    } else if (rhs.nvars() != plain.nvars()) {
        throw RingMismatch("right-hand side is not in the ring of dimension " + std::to_string(n));
    }
    const Poly p = with_width ? change_layout(rhs, formal, plain) : rhs;

    Poly result(plain.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiIndex k(n);
        for (std::size_t i = 0; i < n; ++i) k[i] = e[plain.x(i)];
        const int m = e[plain.y()];
        if (form == ParticularForm::IntegrateY) {
            result += inv_laplacian_monomial(k, m) * c;
        } else {
            result += inv_laplacian_monomial_alt(k[0], m) * c;
        }
    }
    return with_width ? change_layout(result, plain, formal) : result;
}

} // namespace layerpoly
