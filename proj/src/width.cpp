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

#include "layerpoly/width.hpp"

#include "layerpoly/error.hpp"

namespace layerpoly {

Width Width::value(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("layer width must be positive, got " + a.to_string());
    Width w;
    w.value_ = a;
    return w;
}

const Rational& Width::rational() const {
    if (!value_) throw DomainError("width is formal");
    return *value_;
}

Poly Width::as_poly(std::size_t dim) const {
    const Vars vars = layout(dim);
    if (is_formal()) return Poly::variable(vars.nvars(), vars.a());
    return Poly::constant(vars.nvars(), *value_);
}

Poly Width::specialize(const Poly& p, std::size_t dim) const {
    const Vars formal{dim, true};
    if (p.nvars() != formal.nvars()) throw RingMismatch("specialize: polynomial is not in the formal layout");
    if (is_formal()) return p;
    const Poly fixed = substitute(p, formal.a(), Poly::constant(formal.nvars(), *value_));
    return change_layout(fixed, formal, Vars{dim, false});
}

} // namespace layerpoly
