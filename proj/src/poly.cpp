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

#include "layerpoly/poly.hpp"

#include "layerpoly/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace layerpoly {

namespace {

void require_same_ring(const Poly& p, const Poly& q, const char* op) {
    if (p.nvars() != q.nvars()) {
        throw RingMismatch(std::string(op) + ": variable counts differ (" + std::to_string(p.nvars()) +
                           " vs " + std::to_string(q.nvars()) + ")");
    }
}

// e (e-1) ... (e-order+1)
Rational falling_factorial(int e, unsigned order) {
    Rational r(1);
    for (unsigned i = 0; i < order; ++i) r *= Rational(static_cast<long>(e) - static_cast<long>(i));
    return r;
}

} // namespace

int MultiIndex::total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool CanonicalOrder::operator()(const MultiIndex& lhs, const MultiIndex& rhs) const {
    const int dl = lhs.total();
    const int dr = rhs.total();
    if (dl != dr) return dl > dr;
    return lhs.exponents() > rhs.exponents();
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw DomainError("polynomial ring needs at least one variable");
}

Poly Poly::constant(std::size_t nvars, const Rational& value) {
    Poly p(nvars);
    p.add_term(MultiIndex(nvars), value);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw DomainError("variable index out of range");
    MultiIndex e(nvars);
    e[var] = 1;
    return monomial(e);
}

Poly Poly::monomial(const MultiIndex& exps, const Rational& coeff) {
    Poly p(exps.size());
    p.add_term(exps, coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MultiIndex(nvars_));
}

Rational Poly::coefficient(const MultiIndex& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(MultiIndex(nvars_)); }

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Poly::min_degree_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

void Poly::add_term(const MultiIndex& exps, const Rational& coeff) {
    if (exps.size() != nvars_) throw RingMismatch("term has wrong number of exponents");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_ring(*this, rhs, "add");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_ring(*this, rhs, "sub");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    require_same_ring(lhs, rhs, "mul");
    Poly r(lhs.nvars_);
    MultiIndex e(lhs.nvars_);
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
            r.add_term(e, cl * cr);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = constant(nvars_, Rational(1));
    Poly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly diff(const Poly& p, std::size_t var, unsigned order) {
    if (var >= p.nvars()) throw DomainError("diff: variable index out of range");
    if (order == 0) return p;
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] >= 0 && e[var] < static_cast<int>(order)) continue;
        MultiIndex d = e;
        d[var] -= static_cast<int>(order);
        r.add_term(d, c * falling_factorial(e[var], order));
    }
    return r;
}

Poly laplacian(const Poly& p, std::size_t n) {
    if (n + 1 > p.nvars()) {
        throw DomainError("laplacian: dimension " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " variables, ring has " + std::to_string(p.nvars()));
    }
    Poly r(p.nvars());
    for (std::size_t v = 0; v <= n; ++v) r += diff(p, v, 2);
    return r;
}

Poly substitute(const Poly& p, std::size_t var, const Poly& value) {
    require_same_ring(p, value, "substitute");
    if (var >= p.nvars()) throw DomainError("substitute: variable index out of range");

    std::vector<Poly> powers{Poly::constant(p.nvars(), Rational(1))};
    const auto power_of = [&](int e) -> Poly {
        if (e < 0) {
            if (!value.is_constant() || value.is_zero()) {
                throw DomainError("substitute: negative power needs a nonzero constant value");
            }
            return Poly::constant(p.nvars(), value.constant_term().pow(e));
        }
        while (powers.size() <= static_cast<std::size_t>(e)) powers.push_back(powers.back() * value);
        return powers[static_cast<std::size_t>(e)];
    };

    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiIndex rest = e;
        rest[var] = 0;
        if (e[var] == 0) {
            r.add_term(rest, c);
            continue;
        }
        const Poly pw = power_of(e[var]);
        for (const auto& [ev, cv] : pw.terms()) {
            MultiIndex t = rest;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += ev[i];
            r.add_term(t, c * cv);
        }
    }
    return r;
}

Rational eval(const Poly& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw RingMismatch("eval: point has wrong length");
    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= point[i].pow(e[i]);
        }
        sum += t;
    }
    return sum;
}

Poly remap(const Poly& p, std::size_t nvars, std::span<const std::size_t> target) {
    if (target.size() != p.nvars()) throw RingMismatch("remap: target map has wrong length");
    constexpr auto npos = static_cast<std::size_t>(-1);
    Poly r(nvars);
    for (const auto& [e, c] : p.terms()) {
        MultiIndex t(nvars);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] == npos || target[i] >= nvars) {
                throw RingMismatch("remap: dropped variable is in use");
            }
            t[target[i]] += e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::vector<std::string> Vars::names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i + 1));
    out.emplace_back("y");
    if (width) out.emplace_back("a");
    return out;
}

Poly change_layout(const Poly& p, const Vars& from, const Vars& to) {
    if (p.nvars() != from.nvars()) throw RingMismatch("change_layout: polynomial is not in the source layout");
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> target(from.nvars(), npos);
    for (std::size_t i = 0; i < from.dim; ++i) target[from.x(i)] = i < to.dim ? to.x(i) : npos;
    target[from.y()] = to.y();
    if (from.width) target[from.a()] = to.width ? to.a() : npos;
    return remap(p, to.nvars(), target);
}

Poly x_power(const Vars& vars, const MultiIndex& k, const Rational& coeff) {
    if (k.size() != vars.dim) throw DomainError("multi-index length does not match the spatial dimension");
    MultiIndex e(vars.nvars());
    for (std::size_t i = 0; i < vars.dim; ++i) e[vars.x(i)] = k[i];
    return Poly::monomial(e, coeff);
}

} // namespace layerpoly
