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

#include "layerpoly/problem_io.hpp"

#include "layerpoly/error.hpp"
#include "layerpoly/format.hpp"
#include "layerpoly/parse.hpp"

namespace layerpoly {

namespace {

std::string field(const nlohmann::json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw std::invalid_argument(std::string("problem field '") + key + "' must be a string");
}

Poly parse_field(const std::string& text, const Vars& vars, const char* what) {
    try {
        return parse_poly(text, vars);
    } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.what(), e.position());
    }
}

} // namespace

ProblemSpec problem_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("problem must be a JSON object");
    ProblemSpec spec;
    if (j.contains("n")) {
        if (!j.at("n").is_number_unsigned()) throw std::invalid_argument("problem field 'n' must be a positive integer");
        spec.n = j.at("n").get<std::size_t>();
    }
    if (j.contains("a") && j.at("a").is_number_float()) {
        throw std::invalid_argument("width must be a rational literal, not a floating-point number");
    }
    spec.width = field(j, "a", spec.width);
    spec.kind = field(j, "kind", spec.kind);
    spec.rhs = field(j, "rhs", spec.rhs);
    spec.lower = field(j, "lower", spec.lower);
    spec.upper = field(j, "upper", spec.upper);
    return spec;
}

nlohmann::json to_json(const ProblemSpec& spec) {
    return {{"n", spec.n},         {"a", spec.width},         {"kind", spec.kind},
            {"rhs", spec.rhs},     {"lower", spec.lower},     {"upper", spec.upper}};
}

BoundaryKind parse_kind(const std::string& kind) {
    if (kind == "dirichlet") return BoundaryKind::Dirichlet;
    if (kind == "mixed") return BoundaryKind::DirichletNeumann;
    throw std::invalid_argument("unknown boundary kind '" + kind + "' (expected dirichlet or mixed)");
}

std::string kind_name(BoundaryKind kind) { return kind == BoundaryKind::Dirichlet ? "dirichlet" : "mixed"; }

LayerProblem to_problem(const ProblemSpec& spec) {
    if (spec.n == 0) throw DomainError("spatial dimension must be at least 1");
    LayerProblem p;
    p.n = spec.n;
    p.width = Rational::parse(spec.width);
    if (p.width.sign() <= 0) throw DomainError("layer width must be positive, got " + spec.width);
    p.kind = parse_kind(spec.kind);
    const Vars vars = p.vars();
    p.rhs = parse_field(spec.rhs, vars, "rhs");
    p.lower = parse_field(spec.lower, vars, "lower");
    p.upper = parse_field(spec.upper, vars, "upper");
    p.validate();
    return p;
}

nlohmann::json report_to_json(const SolutionReport& report, const LayerProblem& problem) {
    const Vars vars = problem.vars();
    return {
        {"n", problem.n},
        {"a", problem.width.to_string()},
        {"kind", kind_name(problem.kind)},
        {"u", to_text(report.u, vars)},
        {"u_terms", to_json(report.u, vars)},
        {"residuals",
         {{"pde", to_text(report.residual_pde, vars)},
          {"lower", to_text(report.residual_lower, vars)},
          {"upper", to_text(report.residual_upper, vars)}}},
        {"verified", report.verified},
    };
}

} // namespace layerpoly
