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

#include <string_view>

namespace layerpoly {

/// Parses a polynomial expression into the ring described by `vars`.
///
/// Grammar (whitespace-insensitive):
///
///     expr    := ['+'|'-'] term (('+'|'-') term)*
///     term    := power (('*'|'/') power)*
///     power   := primary ['^' exponent]
///     primary := integer | name | '(' expr ')' | '-' primary
///
/// Names are x1..xn (plain `x` when n = 1), y, and `a` when vars.width is set.
/// Exponents are non-negative integer literals, except that `a` also accepts
/// a negative literal (`a^-1`). Division is only by nonzero constants, which is
/// how rational literals such as `1/20` are written. Implicit multiplication
/// (`8x`) is a syntax error.
Poly parse_poly(std::string_view expr, const Vars& vars);

} // namespace layerpoly
