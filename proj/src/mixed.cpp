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

#include "layerpoly/mixed.hpp"

#include "layerpoly/dirichlet.hpp"
#include "layerpoly/error.hpp"
#include "memo_table.hpp"

#include <string>

namespace layerpoly {

namespace {

constexpr Vars kFormal{0, true};

Poly monomial_ya(int ypow, int apow, const Rational& c) {
    MultiIndex m(kFormal.nvars());
    m[kFormal.y()] = ypow;
    m[kFormal.a()] = apow;
    return Poly::monomial(m, c);
}

// Subtracts Σ_{i=1}^{m} a^{2i}/(2i)! prev[m-i]: the cosh(ta) division step.
void divide_by_cosh_step(Poly& acc, std::size_t m, std::span<const Poly> prev) {
    for (std::size_t i = 1; i <= m; ++i) {
        const int p = static_cast<int>(2 * i);
        acc -= monomial_ya(0, p, factorial(static_cast<unsigned>(p)).inverse()) * prev[m - i];
    }
}

Poly signed_scale(const Poly& p, std::size_t m) {
    Rational scale = factorial(static_cast<unsigned>(2 * m));
    if (m % 2 == 1) scale = -scale;
    return p * scale;
}

detail::MemoTable& d_table() {
    static detail::MemoTable table([](std::size_t m, std::span<const Poly> prev) {
        const Poly a_minus_y = monomial_ya(0, 1, Rational(1)) - monomial_ya(1, 0, Rational(1));
        Poly acc = a_minus_y.pow(static_cast<unsigned>(2 * m)) * factorial(static_cast<unsigned>(2 * m)).inverse();
        divide_by_cosh_step(acc, m, prev);
        return acc;
    });
    return table;
}

detail::MemoTable& e_table() {
    static detail::MemoTable table([](std::size_t m, std::span<const Poly> prev) {
        const int order = static_cast<int>(2 * m + 1);
        Poly acc = monomial_ya(order, 0, factorial(static_cast<unsigned>(order)).inverse());
        divide_by_cosh_step(acc, m, prev);
        return acc;
    });
    return table;
}

template <typename Family>
Poly assemble(const MultiIndex& k, std::size_t n, const Width& width, Family family) {
    if (n == 0) throw DomainError("spatial dimension must be at least 1");
    if (k.size() != n) {
        throw DomainError("multi-index has length " + std::to_string(k.size()) + ", dimension is " +
                          std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] < 0) throw DomainError("negative exponent in multi-index");
    }
    const Vars from = width.layout(0);
    const Vars to = width.layout(n);
    Poly result(to.nvars());
    for_each_even_split(k, [&](const MultiIndex& m, const Rational& binom) {
        MultiIndex rest(n);
        for (std::size_t i = 0; i < n; ++i) rest[i] = k[i] - 2 * m[i];
        const Poly g = family(static_cast<std::size_t>(m.total()), width) * mixed_multiindex_factor(m);
        result += x_power(to, rest, binom) * change_layout(g, from, to);
    });
    return result;
}

} // namespace

Poly p_poly(std::size_t m, const Width& width) { return width.specialize(signed_scale(d_table().get(m), m), 0); }

Poly q_poly(std::size_t m, const Width& width) { return width.specialize(signed_scale(e_table().get(m), m), 0); }

Rational mixed_multiindex_factor(const MultiIndex& m) { return multiindex_factor(m); }

Poly mixed_basis_u(const MultiIndex& k, std::size_t n, const Width& width) { return assemble(k, n, width, p_poly); }

Poly mixed_basis_v(const MultiIndex& l, std::size_t n, const Width& width) { return assemble(l, n, width, q_poly); }

} // namespace layerpoly
