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

#include "layerpoly/dirichlet.hpp"

#include "layerpoly/error.hpp"
#include "memo_table.hpp"

#include <string>

namespace layerpoly {

namespace {

// All tables are built in the formal ring (y, a).
constexpr Vars kFormal{0, true};

Poly y_power(int e, const Rational& c) {
    MultiIndex m(kFormal.nvars());
    m[kFormal.y()] = e;
    return Poly::monomial(m, c);
}

Poly a_power(int e, const Rational& c) {
    MultiIndex m(kFormal.nvars());
    m[kFormal.a()] = e;
    return Poly::monomial(m, c);
}

detail::MemoTable& formal_c_table() {
    static detail::MemoTable table([](std::size_t m, std::span<const Poly> prev) {
        const int order = static_cast<int>(2 * m + 1);
        Poly acc = y_power(order, factorial(static_cast<unsigned>(order)).inverse());
        for (std::size_t i = 1; i <= m; ++i) {
            const int p = static_cast<int>(2 * i + 1);
            acc -= a_power(p, factorial(static_cast<unsigned>(p)).inverse()) * prev[m - i];
        }
        return a_power(-1, Rational(1)) * acc;
    });
    return table;
}

detail::MemoTable& formal_f_table() {
    static detail::MemoTable table([](std::size_t m, std::span<const Poly>) {
        Rational scale = factorial(static_cast<unsigned>(2 * m));
        if (m % 2 == 1) scale = -scale;
        return formal_c_table().get(m) * scale;
    });
    return table;
}

void check_multiindex(const MultiIndex& k, std::size_t n) {
    if (n == 0) throw DomainError("spatial dimension must be at least 1");
    if (k.size() != n) {
        throw DomainError("multi-index has length " + std::to_string(k.size()) + ", dimension is " +
                          std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] < 0) throw DomainError("negative exponent in multi-index");
    }
}

} // namespace

CoeffTable c_coeffs(std::size_t max_m, const Width& width) {
    CoeffTable table{width, {}};
    for (const Poly& c : formal_c_table().prefix(max_m + 1)) table.entries.push_back(width.specialize(c, 0));
    return table;
}

Poly f_poly(std::size_t m, const Width& width) { return width.specialize(formal_f_table().get(m), 0); }

Rational multiindex_factor(const MultiIndex& m) {
    Rational r(1);
    int total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw DomainError("negative entry in multi-index");
        const auto mi = static_cast<unsigned>(m[i]);
        r *= factorial(2 * mi) / factorial(mi);
        total += m[i];
    }
    const auto t = static_cast<unsigned>(total);
    return r * factorial(t) / factorial(2 * t);
}

Poly multiindex_f(const MultiIndex& m, const Width& width) {
    const Rational factor = multiindex_factor(m);
    return f_poly(static_cast<std::size_t>(m.total()), width) * factor;
}

Poly basis_u(const MultiIndex& k, std::size_t n, const Width& width) {
    check_multiindex(k, n);
    const Vars from = width.layout(0);
    const Vars to = width.layout(n);
    Poly result(to.nvars());
    for_each_even_split(k, [&](const MultiIndex& m, const Rational& binom) {
        MultiIndex rest(n);
        for (std::size_t i = 0; i < n; ++i) rest[i] = k[i] - 2 * m[i];
        result += x_power(to, rest, binom) * change_layout(multiindex_f(m, width), from, to);
    });
    return result;
}

Poly basis_v(const MultiIndex& k, std::size_t n, const Width& width) {
    const Vars vars = width.layout(n);
    const Poly reflected = width.as_poly(n) - Poly::variable(vars.nvars(), vars.y());
    return substitute(basis_u(k, n, width), vars.y(), reflected);
}

} // namespace layerpoly
