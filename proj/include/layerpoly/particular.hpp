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

namespace layerpoly {

/// Particular solution of Δu = x^k y^m in the ring (x1..xn, y), n = k.size():
///
///     u = Σ_{j=0}^{⌊|k|/2⌋} (-1)^j m!/(m+2j+2)! · y^{m+2j+2} · Δ_x^j x^k
///
/// Degree is |k| + m + 2.
Poly inv_laplacian_monomial(const MultiIndex& k, int m);

/// The x-integrated variant for n = 1:
///
///     u = Σ_{j=0}^{⌊m/2⌋} (-1)^j k! m! / ((k+2j+2)! (m-2j)!) · x^{k+2j+2} y^{m-2j}
Poly inv_laplacian_monomial_alt(int k, int m);

/// Which monomial formula inv_laplacian applies.
enum class ParticularForm {
    IntegrateY,  // general n
    IntegrateX,  // n = 1 only
};

/// Linear extension over the monomials of P. P lives in the layout
/// Vars{n, false}, or Vars{n, true} provided it does not involve a.
Poly inv_laplacian(const Poly& rhs, std::size_t n, ParticularForm form = ParticularForm::IntegrateY);

} // namespace layerpoly
