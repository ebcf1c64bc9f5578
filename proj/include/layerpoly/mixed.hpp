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

namespace layerpoly {

/// p_{2m}(y) from cosh(t(a-y))/cosh(ta) = Σ p_{2m}(y) (-1)^m t^{2m}/(2m)!.
///
/// Built from d_{2m} = (a-y)^{2m}/(2m)! - Σ_{i=1}^{m} a^{2i}/(2i)! d_{2m-2i},
/// p_{2m} = (-1)^m (2m)! d_{2m}. Layout Vars{0, width.is_formal()}.
Poly p_poly(std::size_t m, const Width& width);

/// q_{2m}(y) from sinh(ty)/(t cosh(ta)) = Σ q_{2m}(y) (-1)^m t^{2m}/(2m)!.
///
/// Built from e_{2m} = y^{2m+1}/(2m+1)! - Σ_{i=1}^{m} a^{2i}/(2i)! e_{2m-2i},
/// q_{2m} = (-1)^m (2m)! e_{2m}.
Poly q_poly(std::size_t m, const Width& width);

/// Factor taking p_{2|m|} / q_{2|m|} to the multi-index family; equal to the
/// Dirichlet factor (2m)! |m|! / ((2|m|)! m!).
Rational mixed_multiindex_factor(const MultiIndex& m);

/// Harmonic, value x^k at y = 0, ∂u/∂y = 0 at y = a:
///   u_k = Σ C_k^{2m} x^{k-2m} p_{2m}(y).
Poly mixed_basis_u(const MultiIndex& k, std::size_t n, const Width& width);

/// Harmonic, value 0 at y = 0, ∂v/∂y = x^l at y = a:
///   v_l = Σ C_l^{2m} x^{l-2m} q_{2m}(y).
Poly mixed_basis_v(const MultiIndex& l, std::size_t n, const Width& width);

} // namespace layerpoly
