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

#include "layerpoly/poly.hpp"
#include "layerpoly/width.hpp"

#include <vector>

namespace layerpoly {

/// Taylor coefficients of sinh(ty)/sinh(ta) in t², c_0 .. c_{2M}.
///
/// Entries are polynomials in the layout Vars{0, width.is_formal()}, i.e. in
/// (y) or (y, a). With a formal, c_{2m} carries a single factor a^-1.
struct CoeffTable {
    Width width;
    std::vector<Poly> entries;  // entries[m] = c_{2m}

    Vars layout() const { return width.layout(0); }
};

/// c_0 = y/a and
///   c_{2m} = (1/a)(y^{2m+1}/(2m+1)! - Σ_{i=1}^{m} a^{2i+1}/(2i+1)! c_{2m-2i}).
CoeffTable c_coeffs(std::size_t max_m, const Width& width);

/// f_{2m}(y) = (-1)^m (2m)! c_{2m}, the t^{2m}-moment of the Dirichlet Poisson
/// kernel. Layout Vars{0, width.is_formal()}.
Poly f_poly(std::size_t m, const Width& width);

/// (2m)! |m|! / ((2|m|)! m!) with factorials of multi-indices taken
/// componentwise.
Rational multiindex_factor(const MultiIndex& m);

/// f_{2m} for a multi-index m: multiindex_factor(m) · f_{2|m|}.
Poly multiindex_f(const MultiIndex& m, const Width& width);

/// Harmonic polynomial with value 0 at y = 0 and x^k at y = a:
///   u_k = Σ_{0 <= 2m <= k} C_k^{2m} x^{k-2m} f_{2m}(y),  C_k^{2m} = Π C_{k_i}^{2m_i}.
/// Layout Vars{n, width.is_formal()}.
Poly basis_u(const MultiIndex& k, std::size_t n, const Width& width);

/// v_k(x, y) = u_k(x, a - y): value x^k at y = 0 and 0 at y = a.
Poly basis_v(const MultiIndex& k, std::size_t n, const Width& width);

/// Calls fn(m, C_k^{2m}) for every multi-index m with 0 <= 2 m_i <= k_i.
template <typename Fn>
void for_each_even_split(const MultiIndex& k, Fn&& fn) {
    MultiIndex m(k.size());
    for (;;) {
        Rational c(1);
        for (std::size_t i = 0; i < k.size(); ++i) {
            c *= binomial(static_cast<unsigned>(k[i]), static_cast<unsigned>(2 * m[i]));
        }
        fn(static_cast<const MultiIndex&>(m), c);
        std::size_t i = 0;
        for (; i < k.size(); ++i) {
            if (2 * (m[i] + 1) <= k[i]) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == k.size()) return;
    }
}

} // namespace layerpoly
