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

#include "layerpoly/solver.hpp"

#include <json.hpp>

#include <string>

namespace layerpoly {

/// Textual problem description, as found in a problem file:
///
///     {"n": 1, "a": "1", "kind": "dirichlet",
///      "rhs": "x^4*y^3", "lower": "8*x^4-8*x^2+1", "upper": "8*x^4-8*x^2+1"}
///
/// `a` is a rational literal "p" or "p/q" (a JSON integer is also accepted);
/// kind is "dirichlet" or "mixed". Missing rhs/lower/upper default to "0".
struct ProblemSpec {
    std::size_t n = 1;
    std::string width = "1";
    std::string kind = "dirichlet";
    std::string rhs = "0";
    std::string lower = "0";
    std::string upper = "0";
};

ProblemSpec problem_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProblemSpec& spec);

/// Parses and validates; throws ParseError, DomainError or std::invalid_argument.
LayerProblem to_problem(const ProblemSpec& spec);

BoundaryKind parse_kind(const std::string& kind);
std::string kind_name(BoundaryKind kind);

/// Report with canonical-text polynomials:
/// {"u": ..., "u_terms": {...}, "residuals": {"pde","lower","upper"}, "verified": ...}
nlohmann::json report_to_json(const SolutionReport& report, const LayerProblem& problem);

} // namespace layerpoly
