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

#include <json.hpp>

#include <string>

namespace layerpoly {

/// Canonical text form, e.g. `1/20*x1^4*y^5 - 1/70*x1^2*y^7 + 1/2520*y^9`.
/// Terms follow CanonicalOrder; the zero polynomial prints as `0`.
std::string to_text(const Poly& p, const Vars& vars);

/// LaTeX rendering in canonical term order, nothing factored. For dim 1 the
/// spatial variable prints as `x`, otherwise as `x_{i}`.
std::string to_latex(const Poly& p, const Vars& vars);

/// `{"nvars":N,"vars":[...],"terms":[{"exp":[...],"coeff":"p/q"},...]}`,
/// terms in canonical order.
nlohmann::json to_json(const Poly& p, const Vars& vars);

/// Inverse of to_json; the "vars" field is optional.
Poly poly_from_json(const nlohmann::json& j);

} // namespace layerpoly
