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

#include "layerpoly/format.hpp"

#include "layerpoly/error.hpp"

#include <sstream>

namespace layerpoly {

namespace {

std::string text_monomial(const MultiIndex& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string latex_monomial(const MultiIndex& e, const Vars& vars) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += ' ';
        if (i < vars.dim) {
            out += vars.dim == 1 ? std::string("x") : "x_{" + std::to_string(i + 1) + "}";
        } else {
            out += i == vars.y() ? "y" : "a";
        }
        if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
    }
    return out;
}

std::string latex_number(const Rational& c) {
    if (c.is_integer()) return c.numerator();
    return "\\frac{" + c.numerator() + "}{" + c.denominator() + "}";
}

void check_layout(const Poly& p, const Vars& vars) {
    if (p.nvars() != vars.nvars()) throw RingMismatch("polynomial does not match the variable layout");
}

} // namespace

std::string to_text(const Poly& p, const Vars& vars) {
    check_layout(p, vars);
    if (p.is_zero()) return "0";
    const auto names = vars.names();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        const std::string mono = text_monomial(e, names);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

std::string to_latex(const Poly& p, const Vars& vars) {
    check_layout(p, vars);
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        const std::string mono = latex_monomial(e, vars);
        if (mono.empty()) {
            out += latex_number(mag);
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += latex_number(mag) + " " + mono;
        }
    }
    return out;
}

nlohmann::json to_json(const Poly& p, const Vars& vars) {
    check_layout(p, vars);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e.exponents()}, {"coeff", c.to_string()}});
    }
    return {{"nvars", p.nvars()}, {"vars", vars.names()}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    try {
        const auto nvars = j.at("nvars").get<std::size_t>();
        Poly p(nvars);
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exp").get<std::vector<int>>();
            if (exps.size() != nvars) throw RingMismatch("term exponent vector has wrong length");
            p.add_term(MultiIndex(std::move(exps)), Rational::parse(t.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

} // namespace layerpoly
