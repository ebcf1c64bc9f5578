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

#include <optional>

namespace layerpoly {

/// How the layer width a enters generated polynomials: as the formal ring
/// symbol `a` (last slot) or as a concrete positive rational.
class Width {
public:
    static Width formal() { return Width(); }
    static Width value(const Rational& a);

    bool is_formal() const { return !value_.has_value(); }
    const Rational& rational() const;

    /// Layout of generated polynomials with `dim` spatial variables.
    Vars layout(std::size_t dim) const { return Vars{dim, is_formal()}; }

    /// The width as a polynomial in `layout(dim)`: the symbol a, or a constant.
    Poly as_poly(std::size_t dim) const;

    /// Substitutes the concrete width into `p` (given in Vars{dim, true}) and
    /// drops the a slot. Formal mode returns `p` unchanged.
    Poly specialize(const Poly& p, std::size_t dim) const;

private:
    Width() = default;
    std::optional<Rational> value_;
};

} // namespace layerpoly
